use num_bigint::BigInt;
use num_traits::One;

use super::{IntPoly, PolyError};

/// Primitive gcd with positive leading coefficient, via the subresultant
/// remainder sequence.
///
/// Contents are ignored: `gcd(2x, 4x) = x`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, PolyError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(PolyError::BothZero),
        (true, false) => return Ok(b.primitive_part()),
        (false, true) => return Ok(a.primitive_part()),
        _ => {}
    }
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(b.primitive_part());
        }
        if r.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_scalar_exact(&divisor);
        g = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
}
