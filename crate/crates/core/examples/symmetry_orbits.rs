// The local-unitary symmetry group and canonical forms of subsets.

use lattice16::notation::{parse_subset, render_grid};
use lattice16::symmetry::{generator_deviation, generators, SymmetryGroup};

pub fn run_example() -> lattice16::Result<()> {
    let group = SymmetryGroup::shared();
    println!("group order {}", group.order());
    for g in generators() {
        println!("  {g:<24} deviation {:.1e}", generator_deviation(&g));
    }

    let rho8 = parse_subset(".XXX/.X.X/.XXX/....")?;
    let record = group.canonical_form(rho8);
    let (canonical, element) = group.canonicalize(rho8);
    println!(
        "{} -> canonical {} ({}), orbit {}, stabilizer {}",
        render_grid(rho8),
        record.canonical,
        render_grid(canonical),
        record.orbit_size,
        record.stabilizer_order
    );
    println!("element reaching it: {element:?}");

    let orbits = group.all_orbits();
    println!("{} orbits over all 65 536 subsets", orbits.len());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
