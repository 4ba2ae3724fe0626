//! The point-pushing map, the forgetful map and its section.

use orbimap::{parse_word, Engine, GroupParams};

fn main() -> orbimap::Result<()> {
    let params = GroupParams::with_default_orders(3, 1, 1);
    let engine = Engine::new(&params);

    let loop_word = parse_word("A(3,1) C(3,1)^-1 A(3,2)^2 A(3,2)^-2", &params)?;
    let pushed = engine.push(&loop_word)?;
    println!("push({loop_word}) = {pushed}");
    println!("forget(push) = {:?}", engine.forget(&pushed)?.to_string());
    println!("push trivial: {}", engine.is_trivial(&pushed)?);

    let pure = parse_word("A(2,1) B(3,1) A(3,2)^-1 C(2,1)", &params)?;
    let forgotten = engine.forget(&pure)?;
    println!("forget({pure}) = {forgotten}");

    let lower = params.forget_one()?;
    let lower_word = parse_word("A(2,1)^2 B(1,1)", &lower)?;
    let lifted = engine.section(&lower_word)?;
    println!(
        "section({lower_word}) = {lifted}, forget again = {}",
        engine.forget(&lifted)?
    );
    Ok(())
}
