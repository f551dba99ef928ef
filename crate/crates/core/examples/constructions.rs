//! Quotients, products, localizations, homomorphisms and the derived
//! expansions on each.
//!
//! cargo run --example constructions

use deltan::{
    enumerate_ideals, is_delta_gamma_homomorphism, is_delta_n_ideal, localize, quotient_ring, DeltaNMethod,
    Expansion, Homomorphism, Ideal, MultiplicativeSet, ProductRing, Ring,
};

fn dn(i: &Ideal, d: &Expansion) -> bool {
    i.is_proper() && is_delta_n_ideal(i, d, DeltaNMethod::Definition).unwrap()
}

fn main() -> deltan::Result<()> {
    let r = Ring::modular(24)?;
    let d = Expansion::delta1(&r);

    let j = Ideal::principal(&r.int(8))?;
    let q = quotient_ring(&r, &j)?;
    let dq = d.derive_quotient(&j)?;
    println!("{} via {}", q.ring, dq.recipe());
    for i in enumerate_ideals(&r)?.into_iter().filter(|i| j.is_subset(i).unwrap()) {
        let image = q.image(&i)?;
        println!("  {i:<5} -> {image:<5} delta-n {} / {}", dn(&i, &d), dn(&image, &dq));
    }

    let s = MultiplicativeSet::generated_by(&r, &[r.int(3)])?;
    let loc = localize(&r, &s)?;
    let ds = d.derive_localized(&s)?;
    println!("\n{} has {:?} elements", loc.ring(), loc.ring().size());
    for i in enumerate_ideals(&r)? {
        let e = loc.extend(&i)?;
        println!("  {i:<5} -> {e:<5} contracted {}  delta_S-n {}", loc.contract(&e)?, dn(&e, &ds));
    }

    let p = ProductRing::new(&Ring::modular(2)?, &Ring::modular(4)?)?;
    let (pl, _) = p.projections()?;
    println!("\n{} projection kernel {}", p.ring, pl.kernel());

    let f = Homomorphism::reduction(&Ring::modular(6)?)?;
    let g = Homomorphism::identity(&r)?;
    println!(
        "{} -> {}: surjective {}; identity is a delta1-delta1 map: {}",
        f.source(),
        f.target(),
        f.is_surjective(),
        is_delta_gamma_homomorphism(&g, &d, &d)?
    );
    Ok(())
}
