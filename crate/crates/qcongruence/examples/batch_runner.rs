//! Drive the batch runner from code: build a task, run it on a worker pool,
//! and render the deterministic JSON report.
//!
//! Run with: `cargo run --example batch_runner`

use qcongruence::runner::{emit_format, run, Format, TaskKind, TaskSpec};
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    let mut task = TaskSpec::new(TaskKind::Theorem, "3.3");
    task.n_range = Some((3, 31));
    let report = run(&task, 4, None, false)?;
    println!("{}", emit_format(&report, Format::Json)?);
    assert!(report.all_ok());
    Ok(())
}
