// Pauli tensor products, the Bell-type projector basis and the `η` tables.

use lattice16::linalg::{partial_transpose, ComplexMatrix};
use lattice16::pauli::{eta, flip_operator, index_map, projector, sigma_pair};
use lattice16::{PauliIndex, PauliPair};

pub fn run_example() -> lattice16::Result<()> {
    let s12 = sigma_pair(PauliPair::new(1, 2)?);
    println!(
        "sigma_12 unitary: {}, hermitian: {}, trace {}",
        s12.is_unitary(),
        s12.is_hermitian(),
        s12.trace()
    );

    for alpha in PauliIndex::ALL {
        let map = index_map(alpha);
        let table: Vec<u8> = map.table.iter().map(|b| b.value()).collect();
        println!(
            "i_{alpha} = {table:?}  eta^{alpha} unitary: {}",
            eta(alpha).as_matrix().is_unitary()
        );
    }

    let mut sum = ComplexMatrix::zeros(16);
    for p in PauliPair::all() {
        sum = &sum + projector(p);
    }
    println!(
        "sum of the 16 projectors deviates from I by {:e}",
        sum.max_abs_diff(&ComplexMatrix::identity(16))
    );

    let pt = partial_transpose(projector(PauliPair::new(0, 0)?));
    println!(
        "(id x T)[P_00] - F/4 = {:e}",
        pt.max_abs_diff(&flip_operator().scale_real(0.25))
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
