//! Deciding ω ∈ p^m Ω^q + dΩ^{q−1} with witnesses, and the underlying
//! linear solver over ℤ/N with zero divisors.

use witt_drw::forms::DiffForm;
use witt_drw::linalg::{exact_antiderivative, exactness_mod, howell_solve, verify_witness, ModMatrix};
use witt_drw::ring::IntPoly;

fn main() -> witt_drw::Result<()> {
    let t = IntPoly::var(1, 0);
    let tdt = DiffForm::term(t.clone(), vec![0])?;
    println!("t dt mod 2: {:?}", exactness_mod(&tdt, 2, 1)?.map(|g| g.to_string()));
    let g = exactness_mod(&tdt, 3, 1)?.expect("t dt ≡ d(2t²) mod 3");
    println!("t dt mod 3: g = {g}, verified: {}", verify_witness(&tdt, &g, 3));

    let x = IntPoly::var(2, 0);
    let y = IntPoly::var(2, 1);
    let omega = DiffForm::term(y, vec![0, 1])?;
    let g = exact_antiderivative(&omega)?.expect("y dx∧dy is exact");
    println!("y dx^dy = d({g})");
    let xy = DiffForm::term(&x * &IntPoly::var(2, 1), vec![0, 1])?;
    println!("xy dx^dy mod 2: {:?}", exactness_mod(&xy, 2, 1)?.map(|g| g.to_string()));

    let a = ModMatrix::from_rows(4, &[vec![2], vec![1]])?;
    println!("[2;1]x = [0;2] mod 4: {:?}", howell_solve(&a, &[0, 2])?);
    println!("[2;1]x = [0;1] mod 4: {:?}", howell_solve(&a, &[0, 1])?);
    Ok(())
}
