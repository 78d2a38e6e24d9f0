// The extended reduction map as a witness for PPT lattice states.

use lattice16::notation::parse_subset;
use lattice16::witness::{
    canonical_v_for, phi_v_tilde_diagonal, witness_min_eigenvalue, witness_scan, VMatrix,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> lattice16::Result<()> {
    let right = parse_subset("XX.X/X.X./.X.X/XX.X")?;
    let scan = witness_scan(right)?;
    for r in &scan.reports {
        let v = canonical_v_for(r.contributing_point, r.center)?;
        println!(
            "(mu,nu) = {}: V = {}, value {:.6}, dense {:.6}, min eigenvalue of (id x Phi_V)[rho] {:.6}",
            r.site_mu_nu,
            r.v,
            r.value,
            r.dense_value,
            witness_min_eigenvalue(right, &v)?
        );
    }

    let full = parse_subset("XXXX/XXXX/XXXX/XXX.")?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let v = VMatrix::random(&mut rng);
    let mut lowest = f64::INFINITY;
    for site in lattice16::PauliPair::all() {
        lowest = lowest.min(phi_v_tilde_diagonal(full, site, &v)?);
    }
    println!(
        "N = 15 with a random V: lowest diagonal element {lowest:.6}, scan empty: {}",
        witness_scan(full)?.reports.is_empty()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
