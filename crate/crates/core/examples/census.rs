// Orbit census of every nonempty lattice state, written as JSON lines and CSV.

use std::fs::File;
use std::io::BufReader;

use lattice16::census::Census;
use lattice16::classifier::{Classifier, Label};

pub fn run_example() -> lattice16::Result<()> {
    let classifier = Classifier::default();
    let census = Census::run(&classifier, 1..=16)?;
    println!(
        "{} orbits covering {} subsets",
        census.records.len(),
        census.total_subsets()
    );

    let mut csv = Vec::new();
    census.summary().write_csv(&mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));

    let path = std::env::temp_dir().join(format!("lattice16-census-{}.jsonl", std::process::id()));
    census.write_jsonl(File::create(&path)?)?;
    let back = Census::read_jsonl(BufReader::new(File::open(&path)?))?;
    std::fs::remove_file(&path)?;
    println!(
        "re-read {} records, equal: {}",
        back.records.len(),
        back == census
    );

    for r in census.with_label(Label::Unknown) {
        println!("unknown orbit {} (N = {})", r.canonical, r.n);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
