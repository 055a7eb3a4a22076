//! Witt vectors over ℤ[t] on the ghost side: coordinates, ring operations,
//! Frobenius and Verschiebung, and the failure of non-integral ghost tuples.

use witt_drw::ring::{IntPoly, TruncationSet};
use witt_drw::witt::{verschiebung_teichmuller, GhostTuple, WittVector};

fn main() -> witt_drw::Result<()> {
    let s = TruncationSet::divisors_of(4);
    let t = IntPoly::var(1, 0);

    let a = WittVector::from_witt(s.clone(), 1, vec![t.clone(), IntPoly::constant(1, 3), &t + &IntPoly::one(1)])?;
    println!("a          = {a}");
    let b = WittVector::teichmuller(&t, s.clone());
    println!("[t]        = {b}");
    println!("a + [t]    = {}", a.add(&b)?);
    println!("a * [t]    = {}", a.mul(&b)?);

    let v2 = verschiebung_teichmuller(2, &t, &s)?;
    println!("V_2[t]     = {v2}");
    println!("F_2 V_2[t] = {}  (= 2[t])", v2.frobenius(2)?);

    let two = WittVector::constant(2, TruncationSet::divisors_of(2), 0);
    println!("2 over {{1,2}} has Witt coordinates {:?}", two.witt().iter().map(ToString::to_string).collect::<Vec<_>>());

    let bad = GhostTuple::new(TruncationSet::divisors_of(2), 0, vec![IntPoly::constant(0, 1), IntPoly::constant(0, 2)])?;
    match WittVector::from_ghost(bad) {
        Ok(_) => unreachable!(),
        Err(e) => println!("ghost (1, 2): {e}"),
    }
    Ok(())
}
