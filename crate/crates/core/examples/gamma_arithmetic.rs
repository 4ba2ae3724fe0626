//! Arithmetic in the free product of the cone groups.

use orbimap::{GammaElement, GroupParams};

fn main() -> orbimap::Result<()> {
    let params = GroupParams::new(0, 0, vec![2, 3])?;
    let a = GammaElement::parse("g1*g2^2", &params)?;
    let b = GammaElement::parse("g2*g1", &params)?;
    println!("a = {a}, b = {b}");
    println!("a*b = {}", a.multiply(&b, &params)?);
    println!("a^-1 = {}", a.inverse(&params)?);
    println!("a^3 = {}", a.pow(3, &params)?);

    let g2 = GammaElement::generator(2, &params)?;
    for e in 1..=3 {
        println!("g2^{e} = {}", g2.pow(e, &params)?);
    }

    for seed in 1..=3 {
        let r = GammaElement::random(&params, 8, seed);
        let back = r.multiply(&r.inverse(&params)?, &params)?;
        println!("random r = {r}, r*r^-1 = {back}");
    }
    Ok(())
}
