//! Expansion functions: the catalog, composition and the profile flags.
//!
//! cargo run --example expansions

use deltan::verifier::catalog;
use deltan::{enumerate_ideals, parse_expansion, Expansion, Ring};

fn main() -> deltan::Result<()> {
    let r = Ring::modular(12)?;
    let ideals = enumerate_ideals(&r)?;
    for recipe in catalog(&r)? {
        let d = Expansion::new(&r, &recipe)?;
        let values: Vec<String> = ideals.iter().map(|i| d.apply(i).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        let p = d.profile()?;
        println!("{:<40} {}", d.recipe().to_string(), values.join(" "));
        println!(
            "{:<40} zero_fixed {} idempotent {} intersections {} radical {} colon {}",
            "",
            p.zero_fixed.holds,
            p.idempotent_on_all.holds,
            p.intersection_preserving.holds,
            p.radical_commuting.holds,
            p.colon_condition.holds
        );
    }

    let d = Expansion::new(&r, &parse_expansion("d1 o d+((4))").unwrap())?;
    let g = Expansion::new(&r, &parse_expansion("d1").unwrap())?;
    println!("\n{} ≤ {} pointwise: {}", g.recipe(), d.recipe(), g.pointwise_le(&d)?);
    if let Some(w) = d.profile()?.idempotent_on_all.witness {
        println!("not idempotent at {w}");
    }
    Ok(())
}
