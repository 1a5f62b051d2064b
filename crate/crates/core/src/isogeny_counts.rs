//! Weighted sizes of isogeny classes of elliptic curves over `F_q`.
//!
//! `N_A(t)` counts `F_q`-isomorphism classes with trace of Frobenius `t`,
//! each weighted by `1/|Aut(E)|`; `N_{A,2x2}(t)` restricts to curves with
//! full rational 2-torsion.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::quadratic_forms::{h_w, hurwitz_hw, kronecker, rat, Discriminant, Rat};
use crate::util::{isqrt, odd_prime_power};

/// `t ↦ (N_A(t), N_{A,2x2}(t))` for every `t` with `t² ≤ 4q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyProfile {
    pub q: u64,
    pub table: BTreeMap<i64, (Rat, Rat)>,
}

impl IsogenyProfile {
    pub fn new(q: u64) -> Result<Self> {
        let bound = isqrt(4 * q) as i64;
        let mut table = BTreeMap::new();
        for t in -bound..=bound {
            table.insert(t, (n_a(q, t)?, n_a_2x2(q, t)?));
        }
        Ok(IsogenyProfile { q, table })
    }
}

fn zero() -> Rat {
    rat(0, 1)
}

/// `N_A(t)`.
pub fn n_a(q: u64, t: i64) -> Result<Rat> {
    let (p, v) = odd_prime_power(q)?;
    let (qi, pi) = (q as i64, p as i64);
    let t2 = t * t;
    if t2 > 4 * qi {
        return Ok(zero());
    }
    let square = v % 2 == 0;
    // Special cases first: the generic branch is undefined at t² = 4q.
    if square {
        if t2 == 4 * qi {
            return Ok(rat(pi - 1, 24));
        }
        if t2 == qi {
            return Ok(rat(1 - kronecker(-3, p)? as i64, 6));
        }
        if t == 0 {
            return Ok(rat(1 - kronecker(-4, p)? as i64, 4));
        }
    } else {
        if p == 3 && t2 == 3 * qi {
            return Ok(rat(1, 6));
        }
        if t == 0 {
            return Ok(hurwitz_hw(-4 * pi)? / rat(2, 1));
        }
    }
    if t % pi != 0 {
        return Ok(hurwitz_hw(t2 - 4 * qi)? / rat(2, 1));
    }
    Ok(zero())
}

/// `N_{A,2x2}(t)`.
pub fn n_a_2x2(q: u64, t: i64) -> Result<Rat> {
    let (p, _) = odd_prime_power(q)?;
    let (qi, pi) = (q as i64, p as i64);
    let t2 = t * t;
    if t2 > 4 * qi {
        return Ok(zero());
    }
    if t2 == 4 * qi {
        return n_a(q, t);
    }
    if t2 == qi || t2 == 2 * qi || t2 == 3 * qi {
        return Ok(zero());
    }
    if t == 0 {
        return Ok(if q % 4 == 1 {
            zero()
        } else {
            h_w(Discriminant::new(-pi)?) / rat(2, 1)
        });
    }
    if t % pi != 0 && (t - qi - 1).rem_euclid(4) == 0 {
        return Ok(hurwitz_hw((t2 - 4 * qi) / 4)? / rat(2, 1));
    }
    Ok(zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_a_examples() {
        assert_eq!(n_a(3, 1).unwrap(), rat(1, 2));
        assert_eq!(n_a(3, 0).unwrap(), rat(2, 3));
        assert_eq!(n_a(5, 4).unwrap(), rat(1, 4));
        assert_eq!(n_a(9, 3).unwrap(), rat(1, 6));
        assert_eq!(n_a(5, 5).unwrap(), rat(0, 1));
        assert!(n_a(8, 1).is_err());
    }

    #[test]
    fn n_a_2x2_examples() {
        assert_eq!(n_a_2x2(5, 2).unwrap(), rat(1, 4));
        assert_eq!(n_a_2x2(7, 0).unwrap(), rat(1, 2));
        assert_eq!(n_a_2x2(5, 1).unwrap(), rat(0, 1));
        assert!(n_a_2x2(4, 0).is_err());
    }

    #[test]
    fn profile_invariants() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 49, 81] {
            let prof = IsogenyProfile::new(q).unwrap();
            let mut total = rat(0, 1);
            for (&t, (na, na2)) in &prof.table {
                assert!(na >= na2 && *na2 >= rat(0, 1), "q={q} t={t}");
                if t % 2 != 0 {
                    assert_eq!(*na2, rat(0, 1));
                }
                assert_eq!(na, &n_a(q, -t).unwrap());
                total += na.clone();
            }
            // Every curve is counted once with weight 1/|Aut|; the total is q.
            assert_eq!(total, rat(q as i64, 1), "q={q}");
        }
    }
}
