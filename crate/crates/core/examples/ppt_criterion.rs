// The combinatorial PPT test, the k-matrix and the single-point cross condition.

use lattice16::lattice::{
    diag_state_is_ppt, is_ppt, k_matrix, kappa, prop1b_entangled, ProbabilityTable,
};
use lattice16::notation::{parse_subset, render_table};
use lattice16::{LatticeSubset, PauliPair};

pub fn run_example() -> lattice16::Result<()> {
    for text in [
        "..../XX.X/XX../XXX.",
        "XXX./X.X./.X.X/XXX.",
        "0x0001",
        "0,0;1,1;2,2;3,3",
    ] {
        let s = parse_subset(text)?;
        print!("{}", render_table(s));
        let k = k_matrix(s);
        println!(
            "{s}: N = {}, PPT = {}, kappa = {}, max k = {}, lone-point site = {:?}",
            s.len(),
            is_ppt(s)?,
            kappa(s),
            k.max(),
            if is_ppt(s)? {
                prop1b_entangled(s)?
            } else {
                None
            }
        );
        println!(
            "  cross through (0,0) holds {} points\n",
            s.cross_count(PauliPair::new(0, 0)?)
        );
    }

    let uniform = ProbabilityTable::uniform_on(LatticeSubset::FULL)?;
    println!(
        "uniform diagonal state PPT: {}",
        diag_state_is_ppt(&uniform)
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
