// Dense partial-transpose spectra against the closed form `1/4 − k/(2N)`.

use lattice16::lattice::is_ppt;
use lattice16::linalg::{analytic_pt_spectrum, pt_spectrum};
use lattice16::notation::parse_subset;

pub fn run_example() -> lattice16::Result<()> {
    for text in [
        "0x0001",
        "0xFFFF",
        "..../XX.X/XX../XXX.",
        "XXXX/XXXX/..../....",
    ] {
        let s = parse_subset(text)?;
        let numeric = pt_spectrum(s)?;
        let analytic = analytic_pt_spectrum(s)?;
        println!(
            "{s}: min {:+.6} max {:+.6}  deviation {:.1e}  PPT {}",
            numeric.min(),
            numeric.max(),
            numeric.max_deviation(&analytic),
            is_ppt(s)?
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
