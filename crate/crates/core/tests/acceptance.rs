//! One line per acceptance criterion, with wall-clock budgets.

use std::time::Instant;

use cubica_core::acceptance::criteria;

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.check)();
        let ms = start.elapsed().as_millis() as u64;
        let late = c.limit_ms.is_some_and(|l| ms > l);
        let budget = c.limit_ms.map_or(String::new(), |l| format!(" (limit {l} ms)"));
        match (&outcome, late) {
            (Ok(detail), false) => println!("PASS {:>2} {:<28} {ms:>6} ms{budget}  {detail}", c.id, c.name),
            (Ok(_), true) => {
                println!("FAIL {:>2} {:<28} {ms:>6} ms{budget}  over budget", c.id, c.name);
                failed.push(c.id);
            }
            (Err(e), _) => {
                println!("FAIL {:>2} {:<28} {ms:>6} ms{budget}  {e}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
