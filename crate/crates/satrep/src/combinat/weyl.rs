//! Weyl dimension polynomials for GL_k.

use num_traits::One;

use crate::exact::{Rat, RationalPolynomial};
use crate::{Error, Result};

use super::Partition;

/// The polynomial p with p(n) = dim V_{n lambda}(GL_k), by the Weyl
/// dimension product over positive roots:
///
///   p(n) = prod_{1 <= i < j <= k} (n (lambda_i - lambda_j) + j - i) / (j - i)
///
/// p(0) = 1 always; p(1) is the dimension of V_lambda.
pub fn weyl_dim_poly(k: usize, lambda: &Partition) -> Result<RationalPolynomial> {
    if lambda.height() > k {
        return Err(Error::HeightExceedsRank {
            got: lambda.height(),
            rank: k,
        });
    }
    let mut p = RationalPolynomial::one();
    for i in 0..k {
        for j in i + 1..k {
            let diff = lambda.part(i) as i64 - lambda.part(j) as i64;
            let gap = (j - i) as i64;
            let factor = RationalPolynomial::new(vec![
                Rat::one(),
                crate::exact::rat(diff, gap),
            ]);
            p = p.mul(&factor);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_with_zeros(parts)
    }

    #[test]
    fn exterior_square_of_c3() {
        // k=3, lambda=(1,1): hand product gives (n+1)(n+2)/2 and
        // p(1) = 3 = dim of the exterior square of C^3.
        let w = weyl_dim_poly(3, &p(&[1, 1])).unwrap();
        let expect = RationalPolynomial::from_i64(&[1, 1])
            .mul(&RationalPolynomial::from_i64(&[2, 1]))
            .scale(&crate::exact::rat(1, 2));
        assert_eq!(w, expect);
        assert_eq!(w.eval(&rat_int(1)), rat_int(3));
    }

    #[test]
    fn defining_representation_of_gl2() {
        let w = weyl_dim_poly(2, &p(&[1])).unwrap();
        assert_eq!(w, RationalPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn leading_coefficients_of_big_examples() {
        // k=3, lambda=(21,19): 399 n^3 + 517/2 n^2 + 63/2 n + 1, by
        // expanding (2n+1)(21n+2)(19n+1)/2 by hand.
        let w = weyl_dim_poly(3, &p(&[21, 19])).unwrap();
        let expect = RationalPolynomial::new(vec![
            rat_int(1),
            crate::exact::rat(63, 2),
            crate::exact::rat(517, 2),
            rat_int(399),
        ]);
        assert_eq!(w, expect);

        // k=3, lambda=(12,9,5): (3n+1)(7n+2)(4n+1)/2.
        let w = weyl_dim_poly(3, &p(&[12, 9, 5])).unwrap();
        let expect = RationalPolynomial::new(vec![
            rat_int(1),
            crate::exact::rat(21, 2),
            crate::exact::rat(73, 2),
            rat_int(42),
        ]);
        assert_eq!(w, expect);
    }

    #[test]
    fn normalization_at_zero() {
        for (k, parts) in [(2usize, vec![5]), (4, vec![3, 2, 1]), (5, vec![2, 2])] {
            let w = weyl_dim_poly(k, &Partition::new(parts)).unwrap();
            assert_eq!(w.eval(&rat_int(0)), rat_int(1));
        }
    }

    #[test]
    fn height_exceeding_rank_errors() {
        assert!(matches!(
            weyl_dim_poly(2, &p(&[1, 1, 1])),
            Err(Error::HeightExceedsRank { got: 3, rank: 2 })
        ));
    }
}
