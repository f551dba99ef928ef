//! The idealization R(+)M: homogeneous ideals and the δ₍₊₎ transfer.
//!
//! cargo run --example idealization

use deltan::{
    enumerate_ideals, idealization, is_delta_n_ideal, DeltaNMethod, ElemExpr, Expansion, Module, ModuleSpec, Ring,
};

fn main() -> deltan::Result<()> {
    let base = Ring::modular(8)?;
    let m = Module::new(&base, &ModuleSpec::QuotientModule(vec![ElemExpr::int(4)]))?;
    let id = idealization(&base, &m)?;
    println!("{} has {} ideals", id.ring(), enumerate_ideals(id.ring())?.len());

    let d = Expansion::delta1(&base);
    let up = d.derive_idealization(&m)?;
    println!("{} on the base, {} on the idealization", d.recipe(), up.recipe());
    for (i, n) in id.homogeneous_pairs()? {
        if !i.is_proper() {
            continue;
        }
        let k = id.homogeneous_ideal(&i, &n)?;
        let below = is_delta_n_ideal(&i, &d, DeltaNMethod::Definition)?;
        let above = is_delta_n_ideal(&k, &up, DeltaNMethod::Definition)?;
        println!("  I={i:<4} N={{{}}}  {below} {above}", n.labels().join(","));
    }

    let z4 = Ring::modular(4)?;
    let reg = idealization(&z4, &Module::new(&z4, &ModuleSpec::Regular)?)?;
    let odd: Vec<String> = enumerate_ideals(reg.ring())?
        .iter()
        .filter(|k| reg.split(k).unwrap().is_none())
        .map(|k| k.to_string())
        .collect();
    println!("\n{} ideals not of the form I(+)N: {odd:?}", reg.ring());
    Ok(())
}
