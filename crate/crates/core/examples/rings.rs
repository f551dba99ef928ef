//! Build the supported rings and classify their elements.
//!
//! cargo run --example rings

use deltan::{parse_ring, Ring};

fn main() -> deltan::Result<()> {
    for text in ["Z12", "Z4[x]/(x^3)", "Z2[x]/(x^2+x+1)", "Z2 x Z4", "Z4 (+) Z4", "ZZ"] {
        let r = Ring::new(&parse_ring(text).expect("ring text"))?;
        let c = r.classify();
        println!(
            "{r}: size {:?}, field {}, domain {}, reduced {}, von Neumann regular {}, quasi-local {}",
            r.size(),
            c.is_field,
            c.is_integral_domain,
            c.is_reduced,
            c.is_von_neumann_regular,
            c.is_quasi_local
        );
    }

    let r = Ring::new(&parse_ring("Z4[x]/(x^3)").unwrap())?;
    let a = r.parse_element("1+x")?;
    let b = r.parse_element("1+3x+x^2")?;
    println!("\n({a}) * ({b}) = {}", r.mul(&a, &b)?);
    for text in ["2", "x", "2+x", "1+x", "2x^2"] {
        let e = r.parse_element(text)?;
        let c = r.classify_element(&e)?;
        println!(
            "{e}: unit {}, nilpotent {} (index {:?}), zero divisor {}",
            c.is_unit, c.is_nilpotent, c.nilpotency_index, c.is_zero_divisor
        );
    }
    Ok(())
}
