//! Exhaustive scans of the star-operation identities on one brace.

use braceforge::families::{family2_data, Family2Params};
use braceforge::harness::verify_lemma_suite;

fn main() -> braceforge::Result<()> {
    let br = family2_data(&Family2Params::example(1)?)?.build()?;
    for rep in verify_lemma_suite(&br)? {
        let status = match (rep.applicable, rep.conclusion.holds) {
            (true, true) => "holds",
            (true, false) => "FAILS",
            (false, _) => "n/a",
        };
        println!("{:<12} {:<6} {}", rep.id, status, rep.conclusion.name);
    }
    Ok(())
}
