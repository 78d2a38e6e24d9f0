// Full decision pipeline with a readable report per state.

use lattice16::classifier::{Classifier, ClassifierOptions};
use lattice16::notation::parse_subset;

pub fn run_example() -> lattice16::Result<()> {
    let classifier = Classifier::new(ClassifierOptions {
        numeric_double_check: true,
        ..ClassifierOptions::default()
    });
    for text in [
        "0x0001",
        "..../XX.X/XX../XXX.",
        "XXX./XXXX/XXX./...X",
        ".XX./.XX./.XX./....",
        "X..X/XX.X/XXX./XXX.",
        "0x7FFF",
    ] {
        println!("{}", classifier.explain(parse_subset(text)?)?);
    }
    let c = classifier.classify(parse_subset("XXX./XXXX/XXX./...X")?)?;
    println!("{}", serde_json::to_string(&c)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
