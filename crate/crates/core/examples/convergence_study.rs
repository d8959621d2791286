//! Error indexes against the number of terms, written as CSV and plot data.

use composite_fourier::report::{cmd_convergence, MethodSelection, OutputFormat, SampleSelection, StudyConfig};

fn main() -> composite_fourier::Result<()> {
    let out = std::env::temp_dir().join("cfsm-convergence-example");
    let cfg = StudyConfig {
        samples: SampleSelection::One(8),
        method: MethodSelection::Both,
        terms: vec![2, 5, 10, 20],
        out: out.clone(),
        format: OutputFormat::Both,
        ..StudyConfig::default()
    };
    let records = cmd_convergence(&cfg)?;
    for rec in records.iter().filter(|r| r.index_name == "||e||^4" && r.subset.as_str() == "overall") {
        println!("{:<10} M={:<3} ||e||^4 = {}", rec.method, rec.m, rec.value);
    }
    println!("{} records under {}", records.len(), out.display());
    Ok(())
}
