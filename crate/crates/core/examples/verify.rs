//! Run the claim registry over the built-in corpus.
//!
//! cargo run --release --example verify

use deltan::verifier::{builtin_corpus, explain, find_counterexample, registry, run, ClaimKind, DEFAULT_WITNESS_CAP};

fn main() -> deltan::Result<()> {
    let corpus = builtin_corpus();
    let report = run(&corpus, None, DEFAULT_WITNESS_CAP)?;
    print!("{}", report.to_text());

    let instances = corpus.bind()?;
    println!("\nself-tests (each must find a witness):");
    for c in registry().iter().filter(|c| c.kind == ClaimKind::SelfTest) {
        match find_counterexample(c.id, &instances)? {
            Some(w) => println!("  {}: {w}", c.id),
            None => println!("  {}: no witness", c.id),
        }
    }
    println!();
    print!("{}", explain("example-e3-audit")?);
    Ok(())
}
