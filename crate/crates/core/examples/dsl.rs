//! The specification language: rings, ideals, expansions and errors.
//!
//! cargo run --example dsl

use deltan::dsl::{parse_ideal, parse_spec, print_expansion};
use deltan::{parse_expansion, parse_ring};

fn main() {
    for text in ["Z4[x]/(x^3)", "Z4 x Z9", "Z2 x Z2 x Z3", "Z8 (+) quot(Z8, (4))", "loc(Z12, {3})", "quot(ZZ, (6))"] {
        match parse_ring(text) {
            Ok(spec) => println!("{text:<22} -> {spec}"),
            Err(e) => println!("{text:<22} -> {e}"),
        }
    }
    println!("{:?}", parse_ideal("(2, x)").unwrap());

    for text in ["d1 o d+((3))", "d0 o d1 o full", "d*((2,x))", "compose(delta1, delta_star(gens=[2]))"] {
        let e = parse_expansion(text).unwrap();
        println!("{text:<40} -> {e}  (short {})", print_expansion(&e));
    }

    let s = parse_spec("Z6 ; d0 ; d+((2))").unwrap();
    println!("\nspec: ring {}, {} expansions", s.ring, s.expansions.len());

    let errors = [
        ("Z6 )", parse_ring("Z6 )").unwrap_err()),
        ("Z4 x", parse_ring("Z4 x").unwrap_err()),
        ("d+((2)", parse_expansion("d+((2)").unwrap_err()),
    ];
    for (bad, e) in errors {
        println!("{bad:<8} offset {} expected {:?} found {}", e.offset, e.expected, e.found);
    }
}
