// Exact separability certificates over the rank-4 PPT lattice states.

use lattice16::notation::parse_subset;
use lattice16::separability::{check_certificate, decompose, SeparableBasis};
use lattice16::symmetry::SymmetryGroup;

pub fn run_example() -> lattice16::Result<()> {
    let basis = SeparableBasis::build();
    let group = SymmetryGroup::shared();
    println!("{} PPT subsets with four sites", basis.len());

    for text in [
        ".XXX/.XXX/.XXX/....",
        ".XXX/.X.X/.XXX/....",
        ".XX./.XX./.XX./....",
        "...X/..X./XX../XX..",
        "..../XX.X/XX../XXX.",
    ] {
        let target = parse_subset(text)?;
        match decompose(&basis, group, target)? {
            Some(cert) => {
                check_certificate(&basis, &cert)?;
                println!("{text}: {} members, {}", cert.len(), cert);
                println!("  {}", serde_json::to_string(&cert)?);
            }
            None => println!("{text}: no decomposition over the rank-4 separable basis"),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
