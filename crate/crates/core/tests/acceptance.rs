//! End-to-end acceptance run: one line per criterion, written to stderr so it
//! shows up without `--nocapture`.

use std::io::Write;
use std::time::Instant;

use flag_spheres::checks::{self, CriterionResult};

#[test]
fn acceptance() {
    let seed = 0;
    let criteria: Vec<(&str, Box<dyn Fn() -> CriterionResult>)> = vec![
        ("1", Box::new(checks::criterion_1)),
        ("2", Box::new(checks::criterion_2)),
        ("3", Box::new(checks::criterion_3)),
        ("4", Box::new(checks::criterion_4)),
        ("5", Box::new(checks::criterion_5)),
        ("6", Box::new(checks::criterion_6)),
        ("7", Box::new(move || checks::criterion_7(seed))),
        ("8", Box::new(move || checks::criterion_8(seed))),
        ("9", Box::new(checks::criterion_9)),
        ("10", Box::new(checks::criterion_10)),
        ("11", Box::new(move || checks::criterion_11(seed))),
    ];
    let mut failed = Vec::new();
    let mut stderr = std::io::stderr();
    for (id, run) in &criteria {
        let start = Instant::now();
        let r = run();
        let _ = writeln!(stderr, "{r} ({:.2}s)", start.elapsed().as_secs_f64());
        if !r.passed {
            failed.push(*id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
