//! Prints the pure and full presentations for a few parameter choices.

use orbimap::{full_presentation, pure_presentation, ExportFormat, GroupParams};

fn main() -> orbimap::Result<()> {
    let small = GroupParams::with_default_orders(2, 1, 1);
    println!("pure, algebra form:");
    print!(
        "{}",
        pure_presentation(&small).export(ExportFormat::Algebra)
    );
    println!();
    println!("full, text form:");
    print!("{}", full_presentation(&small)?.export(ExportFormat::Text));
    println!();

    for (n, l, c) in [(3, 0, 0), (3, 1, 1), (4, 2, 2)] {
        let p = GroupParams::with_default_orders(n, l, c);
        println!(
            "{p}: pure {} generators / {} relators, full {} relators",
            pure_presentation(&p).generators.len(),
            pure_presentation(&p).relators.len(),
            full_presentation(&p)?.relators.len()
        );
    }
    Ok(())
}
