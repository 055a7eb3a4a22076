//! The dual functionals separating tuples of forms, computed as scaled
//! coefficient projections and as Möbius sums of Witt vector operations.

use witt_drw::drw::{all_functionals, dual_functional_mobius, DrwForm};
use witt_drw::forms::DiffForm;
use witt_drw::ring::{IntPoly, TruncationSet};

fn main() -> witt_drw::Result<()> {
    let s = TruncationSet::p_typical(2, 1);
    let t = IntPoly::var(1, 0);
    let f1 = &t + &IntPoly::constant(1, 2);
    let f2 = t.pow(3);
    let w = DrwForm::from_components(
        1,
        1,
        s,
        vec![DiffForm::term(f1, vec![0])?, DiffForm::term(f2, vec![0])?],
    )?;
    for ((m, idx), value) in all_functionals(&w)? {
        assert_eq!(dual_functional_mobius(&w, m, &idx)?, value);
        println!("phi_({m}, {idx:?}) = {value}");
    }
    Ok(())
}
