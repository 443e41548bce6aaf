//! Checking the factorization theorems on the builtin corpus.

use braceforge::harness::{corpus, verify_entry, verify_group_ito, verify_theorem, Theorem};

fn main() -> braceforge::Result<()> {
    for entry in corpus(100)? {
        let reports = verify_entry(&entry, 100)?;
        let applicable = reports.iter().filter(|r| r.applicable).count();
        let alerts = reports.iter().filter(|r| r.is_red_alert()).count();
        println!("{:<40} {:>3} checks, {:>3} applicable, {alerts} red alerts", entry.name, reports.len(), applicable);
    }

    let entries = corpus(100)?;
    let ex1 = entries.iter().find(|e| e.name.starts_with("family2 example (1)")).unwrap();
    let rep = verify_theorem(&ex1.brace, Theorem::Ito, &ex1.b_set, &ex1.c_set)?;
    println!("\n{}: applicable {}, failed {:?}, conclusion {}", rep.id, rep.applicable, rep.failed_hypotheses(), rep.conclusion.holds);

    let s3 = braceforge::harness::factored_groups()?.swap_remove(1);
    for rep in verify_group_ito(&s3.0, &s3.1, &s3.2) {
        println!("S3 {}: applicable {}, conclusion {}", rep.id, rep.applicable, rep.conclusion.holds);
    }
    Ok(())
}
