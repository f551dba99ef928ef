//! Enumerate an ideal lattice and apply the ideal operators.
//!
//! cargo run --example ideal_lattice

use deltan::{enumerate_ideals, special_sets, Ideal, Ring};

fn main() -> deltan::Result<()> {
    let r = Ring::modular(24)?;
    let ideals = enumerate_ideals(&r)?;
    println!("{r} has {} ideals", ideals.len());
    for i in &ideals {
        let c = i.classify();
        println!(
            "  {i:<6} size {:>2}  radical {:<5} prime {:<5} maximal {:<5} primary {:<5} superfluous {}",
            i.len().unwrap(),
            i.radical().to_string(),
            c.is_prime,
            c.is_maximal,
            c.is_primary,
            c.is_superfluous
        );
    }

    let (i, j) = (Ideal::principal(&r.int(4))?, Ideal::principal(&r.int(6))?);
    println!("\nI = {i}, J = {j}");
    println!("I + J = {}", i.sum(&j)?);
    println!("I J = {}", i.product(&j)?);
    println!("I ∩ J = {}", i.intersect(&j)?);
    println!("(I : J) = {}", i.colon_ideal(&j)?);
    println!("(I : 3) = {}", i.colon_element(&r.int(3))?);

    let s = special_sets(&r, Some(&i))?;
    println!("nilradical {}, Jacobson radical {}", s.nilradical, s.jacobson);

    let zz = Ring::integers();
    let k = Ideal::integer(12);
    println!("\nin {zz}: √{k} = {}, ({k} : 8) = {}", k.radical(), k.colon_element(&zz.int(8))?);
    Ok(())
}
