//! Decide δ-n-ideals four ways, print witnesses and spectra.
//!
//! cargo run --example delta_n

use deltan::{
    delta_n_spectrum, delta_n_witness, delta_nilpotents, enumerate_ideals, is_delta_n_ideal, is_delta_primary,
    is_n_ideal, is_quasi_n_ideal, DeltaNMethod, Expansion, Ideal, Ring,
};

fn main() -> deltan::Result<()> {
    let z6 = Ring::modular(6)?;
    let zero = Ideal::zero(&z6);
    for d in [Expansion::delta0(&z6), Expansion::delta1(&z6)] {
        let (a, b) = delta_n_witness(&zero, &d)?.expect("not delta-n");
        println!("{z6}, {}: {{0}} fails with a={a}, b={b}", d.recipe());
    }

    let z8 = Ring::modular(8)?;
    let d0 = Expansion::delta0(&z8);
    let s = delta_n_spectrum(&z8, &d0)?;
    let all: Vec<String> = s.all.iter().map(|i| i.to_string()).collect();
    println!("\n{z8}, delta0 spectrum {all:?}, maximal {}", s.maximal_members[0]);
    println!("delta0-nilpotents {:?}", delta_nilpotents(&z8, &d0)?);

    let z12 = Ring::modular(12)?;
    println!("{z12}, delta0 spectrum empty: {}", delta_n_spectrum(&z12, &Expansion::delta0(&z12))?.all.is_empty());

    let z36 = Ring::modular(36)?;
    let d = Expansion::delta_plus(&Ideal::principal(&z36.int(3))?)?;
    println!("\n{z36} with {}", d.recipe());
    for i in enumerate_ideals(&z36)?.into_iter().filter(|i| i.is_proper()) {
        let flags: Vec<bool> = DeltaNMethod::ALL.iter().map(|&m| is_delta_n_ideal(&i, &d, m)).collect::<Result<_, _>>()?;
        println!(
            "  {i:<5} delta-n {:?} n-ideal {} quasi-n {} delta-primary {}",
            flags,
            is_n_ideal(&i)?,
            is_quasi_n_ideal(&i)?,
            is_delta_primary(&i, &d)?
        );
    }

    let zz = Ring::integers();
    let d = Expansion::delta_plus(&Ideal::integer(3))?;
    let i = Ideal::integer(5);
    println!(
        "\n{zz}: {i} is {}-n: {}, n-ideal: {}",
        d.recipe(),
        is_delta_n_ideal(&i, &d, DeltaNMethod::Definition)?,
        is_n_ideal(&i)?
    );
    Ok(())
}
