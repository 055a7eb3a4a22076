//! The Dwork congruences decide integrality of ghost tuples; compare them
//! with the exact-division reconstruction on a few perturbed tuples.

use witt_drw::ring::{IntPoly, TruncationSet};
use witt_drw::sample::{self, PolyShape};
use witt_drw::witt::{dwork_check, dwork_failure, GhostTuple, WittVector};

fn main() {
    let s = TruncationSet::divisors_of(6);
    let mut rng = sample::rng(1);
    for round in 0..6 {
        let a = sample::witt_vector(&mut rng, &s, 1, PolyShape::small());
        let mut comps = a.ghost().comps().to_vec();
        if round % 2 == 1 {
            let j = round % comps.len();
            comps[j] = &comps[j] + &IntPoly::one(1);
        }
        let g = GhostTuple::new(s.clone(), 1, comps).unwrap();
        let integral = WittVector::from_ghost(g.clone()).is_ok();
        println!(
            "tuple {round}: dwork_check = {:5}, integral = {integral:5}, first failing (n, p) = {:?}",
            dwork_check(&g),
            dwork_failure(&g)
        );
    }
}
