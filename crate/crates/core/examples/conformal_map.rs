//! Map the unit disk onto an ellipse and write the mesh as SVG.
//!
//! ```text
//! cargo run --release --example conformal_map -- ellipse.svg
//! ```

use std::time::Instant;

use harmonia::cli::svg;
use harmonia::conformal::{coefficients, evaluate_disk, solve, Shape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "ellipse.svg".into());
    let shape: Shape = "ellipse:a=2,b=1".parse()?;

    let start = Instant::now();
    let sol = solve(&shape.curve(), 2048, 1e-10, 50)?;
    let mesh = evaluate_disk(&sol, 16, 32)?;
    println!("solved n = {} in {} iterations, {:?}", sol.n, sol.iterations, start.elapsed());
    for (i, r) in sol.history.iter().enumerate() {
        println!("  iteration {:2}: residual {r:.3e}", i + 1);
    }
    let (radial, tangent) = sol.analyticity_residuals()?;
    println!("analyticity residuals {radial:.1e} / {tangent:.1e}");
    for (k, c) in coefficients(&sol).c.iter().take(6).enumerate() {
        println!("  c_{k} = {c:.6}");
    }

    std::fs::write(&out, svg::render(&mesh))?;
    println!("wrote {out}");
    Ok(())
}
