//! Validates the braid embedding and cross-checks the engine against it.

use orbimap::oracle::{validate_embedding, BraidEmbedding};
use orbimap::random::mixed_test_word;
use orbimap::{Engine, GroupParams};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> orbimap::Result<()> {
    let params = GroupParams::with_default_orders(3, 2, 1);
    let report = validate_embedding(&params)?;
    println!(
        "embedding for {params}: {:?} convention, {} relators and {} abbreviations checked",
        report.side, report.relators_checked, report.abbreviations_checked
    );

    let emb = BraidEmbedding::new(&params, report.side.expect("validated"));
    println!("{} strands", emb.layout().strands());
    let engine = Engine::new(&params);
    let mut rng = StdRng::seed_from_u64(1);
    let (mut agree, mut trivial) = (0, 0);
    for _ in 0..200 {
        let w = mixed_test_word(&params, 30, &mut rng);
        let ans = engine.is_trivial(&w)?;
        agree += usize::from(ans == emb.is_trivial(&w));
        trivial += usize::from(ans);
    }
    println!("engine and oracle agree on {agree}/200 words ({trivial} trivial)");
    Ok(())
}
