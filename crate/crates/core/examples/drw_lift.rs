//! Deciding membership of a p-typical tuple of forms and producing an
//! explicit generator expression for it.

use witt_drw::drw::{drw_dwork_check, drw_lift, drw_multi_report, DrwForm};
use witt_drw::forms::DiffForm;
use witt_drw::json::genexpr_to_json;
use witt_drw::ring::{IntPoly, TruncationSet};

fn main() -> witt_drw::Result<()> {
    let s = TruncationSet::p_typical(2, 1);
    let t = IntPoly::var(1, 0);
    let one_form = |f: IntPoly| DiffForm::term(f, vec![0]);

    let dt = DrwForm::from_components(1, 1, s.clone(), vec![DiffForm::zero(1, 1), one_form(IntPoly::one(1))?])?;
    println!("(0, dt) accepted: {}", drw_dwork_check(&dt, 2)?);
    let expr = drw_lift(&dt, 2)?;
    println!("lift: {}", genexpr_to_json(&expr));
    assert_eq!(expr.evaluate(&s)?, dt);

    let tdt = DrwForm::from_components(1, 1, s.clone(), vec![DiffForm::zero(1, 1), one_form(t.clone())?])?;
    println!("(0, t dt) accepted: {}", drw_dwork_check(&tdt, 2)?);
    println!("lift: {:?}", drw_lift(&tdt, 2).err());

    let s6 = TruncationSet::divisors_of(6);
    let w = DrwForm::generator(3, &t, &s6)?.dd()?;
    for p in [2, 3] {
        for e in drw_multi_report(&w, p)? {
            let witness = e.witness.map_or("-".into(), |g| g.to_string());
            println!("p={p} k={}: {} in p^{} + d? {} (g = {witness})", e.k, e.difference, e.exponent, e.holds);
        }
    }
    Ok(())
}
