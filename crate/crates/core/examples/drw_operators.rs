//! Ghost-side de Rham–Witt forms: generators, 𝕕, Frobenius, Verschiebung,
//! and the two normalizations of components.

use witt_drw::drw::DrwForm;
use witt_drw::ring::{IntPoly, TruncationSet};

fn main() -> witt_drw::Result<()> {
    let s = TruncationSet::divisors_of(6);
    let t = IntPoly::var(1, 0);

    let v3 = DrwForm::generator(3, &t, &s)?;
    let dv3 = v3.dd()?;
    println!("V_3<t>     = {v3:?}");
    println!("dd V_3<t>  = {dv3:?}");
    println!("d-convention components: {:?}", dv3.to_d_convention().iter().map(ToString::to_string).collect::<Vec<_>>());

    let s12 = TruncationSet::divisors_of(2);
    let dv2 = DrwForm::generator(2, &t, &s12)?.dd()?;
    println!("F_2 dd V_2<t> = {:?}", dv2.frobenius(2)?);

    let w = DrwForm::generator(1, &t, &s)?.mul(&dv3)?;
    let lhs = w.dd()?.frobenius(2)?;
    let rhs = w.frobenius(2)?.dd()?;
    println!("dd F_2 = 2 F_2 dd on [t]·dd V_3<t>: {}", rhs == lhs.scale(&2.into()));
    println!("dd dd = 0: {}", w.dd()?.dd()?.is_zero());
    Ok(())
}
