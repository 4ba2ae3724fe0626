//! Solves the word problem by combing and prints normal forms.

use orbimap::{parse_word, Engine, GroupParams};

fn main() -> orbimap::Result<()> {
    let params = GroupParams::new(3, 1, vec![2, 3])?;
    let engine = Engine::new(&params);
    for text in [
        "H1 H2 H1 H2^-1 H1^-1 H2^-1",
        "H1 T1 H1 T1 H1^-1 T1^-1 H1^-1 T1^-1",
        "H1^2",
        "H2 U2 H2^-1",
        "T1 H1 H2 U1 H2^-1 H1^-1",
        "",
    ] {
        let w = parse_word(text, &params)?;
        let nf = engine.normal_form(&w)?;
        let verdict = if nf.is_trivial() {
            "trivial"
        } else {
            "nontrivial"
        };
        println!(
            "{text:?}\n  {verdict}: {nf}\n  rep: {}",
            nf.representative()
        );
    }

    let u = parse_word("H1 H2 H1", &params)?;
    let v = parse_word("H2 H1 H2", &params)?;
    println!("H1 H2 H1 == H2 H1 H2: {}", engine.equal(&u, &v)?);
    Ok(())
}
