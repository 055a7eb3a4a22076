//! Splitting a ghost tuple along I_p and iterating down to the ghost map.

use witt_drw::ring::{IntPoly, TruncationSet};
use witt_drw::witt::{blowup_merge, blowup_split, iterated_split, localized_member, mu_element, GhostTuple};

fn main() -> witt_drw::Result<()> {
    let s = TruncationSet::divisors_of(6);
    let g = GhostTuple::new(s.clone(), 0, [11, 12, 13, 16].map(|c| IntPoly::constant(0, c)).to_vec())?;
    let (left, right) = blowup_split(&g, 2)?;
    println!("split at 2: {left} | {right}");
    assert_eq!(blowup_merge(&left, &right, 2)?, g);

    for order in [[2, 3], [3, 2]] {
        let leaves: Vec<String> = iterated_split(&g, &order)?.iter().map(|(n, f)| format!("{n}:{f}")).collect();
        println!("iterated over {order:?}: {}", leaves.join(", "));
    }

    // (0, t) is half the ghost tuple of V_2[t]: not integral, but in the blow-up
    let t = IntPoly::var(1, 0);
    let half = GhostTuple::new(TruncationSet::divisors_of(2), 1, vec![IntPoly::zero(1), t])?;
    println!("(0, t) in the localization: {}", localized_member(&half, 2)?);

    for n in s.elems() {
        println!("mu_{n} = {}", mu_element(*n, &s, 0)?.ghost());
    }
    Ok(())
}
