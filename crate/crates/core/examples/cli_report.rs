// Driving the `voa` command line from code and reading its JSON report.

use weylvoa::cli::{run, Status};

pub fn run_example() -> weylvoa::Result<()> {
    let dir = std::env::temp_dir().join(format!("voa-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| weylvoa::Error::Parse(e.to_string()))?;
    let json = dir.join("classify.json");
    let args = ["voa", "classify", "--ell", "3", "--bound", "4", "--json", json.to_str().unwrap()];

    let mut text = Vec::new();
    let outcome = run(args, &mut text, &mut std::io::stderr());
    print!("{}", String::from_utf8_lossy(&text));
    println!("exit status {}", outcome.code);

    let report = outcome.report.expect("report");
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    let written = std::fs::read_to_string(&json).map_err(|e| weylvoa::Error::Parse(e.to_string()))?;
    println!("{written}");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
