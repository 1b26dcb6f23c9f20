//! Witness rotations for the modulus-gap condition, degree by degree.

use isofield::repr::{search_witness, zero_set_probe};

fn main() -> isofield::Result<()> {
    for l in 1..=8 {
        let report = search_witness(l, None, 10, 0)?;
        let zero = zero_set_probe(l, 5_000, 0)?;
        match report.witness {
            Some(g) => println!(
                "l={l}: witness for orders {:?}, min gap {:.3e}, g = ({:.4}, {:.4}, {:.4}); zero-set fraction {zero:.4}",
                report.orders, report.min_gap, g.alpha, g.beta, g.gamma
            ),
            None => println!("l={l}: no witness in {} draws (best min gap {:.1e}); zero-set fraction {zero:.4}", report.samples_tried, report.min_gap),
        }
    }
    Ok(())
}
