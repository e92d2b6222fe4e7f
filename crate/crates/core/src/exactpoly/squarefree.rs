use super::{gcd, IntPoly, PolyError};

/// Yun's square-free decomposition of the primitive part of `p`.
///
/// Returns pairwise coprime square-free parts of positive degree, each
/// primitive with positive leading coefficient, sorted by degree and then by
/// coefficient sequence. The product of `part^multiplicity` equals
/// `p.primitive_part()`.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let f = p.primitive_part();
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = exact(&f, &a0);
    let mut c = exact(&df, &a0);
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = gcd(&b, &d)?;
        b = exact(&b, &a);
        c = exact(&d, &a);
        d = &c - &b.derivative();
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a, i));
        }
        i += 1;
    }
    out.sort_by(|x, y| factor_order(&x.0, &y.0));
    Ok(out)
}

fn exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    num.divide_exact(den)
        .expect("nonzero divisor")
        .expect("primitive divisor of a multiple divides exactly")
}

/// Ordering by degree, then lexicographically by coefficients from the
/// constant term upward.
pub(crate) fn factor_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}
