//! Normalizes a G-path and checks invariance under moves.

use orbimap::{GPath, GammaElement, GroupParams};

fn main() -> orbimap::Result<()> {
    let params = GroupParams::new(0, 0, vec![2, 3])?;
    let path = GPath::parse("(g1, [g2]s1, g2^2, [e]s2, g1*g2)", &params)?;
    println!("path:      {path}");
    let normal = path.normalize(&params)?;
    println!("normal:    {normal}");

    let h = GammaElement::parse("g2*g1", &params)?;
    let moved = path.shift(1, &h, &params)?.subdivide(2)?.subdivide(1)?;
    println!("moved:     {moved}");
    let moved_normal = moved.normalize(&params)?;
    println!("normal:    {moved_normal}");
    println!("same continuous form: {}", normal == moved_normal);
    println!("back to a path: {}", normal.to_gpath()?);
    Ok(())
}
