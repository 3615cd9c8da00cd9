//! Upper bounds on the chromatic number of exact distance graphs.

use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

fn check_t(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "bound formulas need t >= 2, got {t}"
        )));
    }
    Ok(())
}

fn check_p(p: u64) -> Result<()> {
    if p == 0 {
        return Err(Error::ZeroDistance);
    }
    Ok(())
}

fn product(name: &'static str, factors: &[u64]) -> Result<u64> {
    factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow(name))
}

fn pow(name: &'static str, base: u64, exp: usize) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or(Error::Overflow(name))
}

/// Chordal graph with clique number `t`: `C(t,2)·(p+1)` for odd `p`,
/// `C(t,2)·Δ·(p+1)` for even `p`. `delta` is ignored for odd `p`.
pub fn bound_main1(t: u64, p: u64, delta: u64) -> Result<u64> {
    check_t(t)?;
    check_p(p)?;
    let pairs = binomial(t, 2).ok_or(Error::Overflow("bound_main1"))?;
    if p % 2 == 1 {
        product("bound_main1", &[pairs, p + 1])
    } else {
        product("bound_main1", &[pairs, delta, p + 1])
    }
}

/// Validates a distance set `S ⊆ {1..p}` and returns it sorted and deduplicated.
pub fn validate_distance_set(s: &[u32], p: u32) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Err(Error::InvalidParameter("distance set S is empty".into()));
    }
    if let Some(&bad) = s.iter().find(|&&d| d == 0 || d > p) {
        return Err(Error::InvalidParameter(format!(
            "distance {bad} is outside 1..={p}"
        )));
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Number of even members of `S`.
pub fn even_count(s: &[u32]) -> usize {
    s.iter().filter(|&&d| d % 2 == 0).count()
}

/// Bound for the union of exact distance graphs over `S ⊆ {1..p}` with `q`
/// even members: `C(t,2)^s·Δ^q·(p+1)` when `1 ∉ S`, otherwise
/// `t·C(t,2)^(s-1)·Δ^q·(p+1)`.
pub fn bound_main2(t: u64, p: u32, s: &[u32], delta: u64) -> Result<u64> {
    check_t(t)?;
    let s = validate_distance_set(s, p)?;
    let q = even_count(&s);
    let pairs = binomial(t, 2).ok_or(Error::Overflow("bound_main2"))?;
    let (lead, level_factors) = if s.contains(&1) {
        (t, s.len() - 1)
    } else {
        (1, s.len())
    };
    product(
        "bound_main2",
        &[
            lead,
            pow("bound_main2", pairs, level_factors)?,
            pow("bound_main2", delta, q)?,
            u64::from(p) + 1,
        ],
    )
}

/// Bound for graphs of tree-width at most `t`: `t·C(p+t-1,t)+1` for odd `p`,
/// `(t·C(p+t,t)+1)·Δ` for even `p`.
pub fn bound_tw(t: u64, p: u64, delta: u64) -> Result<u64> {
    check_t(t)?;
    check_p(p)?;
    let ovf = Error::Overflow("bound_tw");
    if p % 2 == 1 {
        let c = binomial(p + t - 1, t).ok_or(ovf.clone())?;
        product("bound_tw", &[t, c])?.checked_add(1).ok_or(ovf)
    } else {
        let c = binomial(p + t, t).ok_or(ovf.clone())?;
        let inner = product("bound_tw", &[t, c])?.checked_add(1).ok_or(ovf)?;
        product("bound_tw", &[inner, delta])
    }
}

/// Exponent of `Δ` in the power-graph bound for degenerate graphs.
pub fn bound_largepow_exponent(p: u64) -> u64 {
    p / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(2, 2), Some(1));
        assert_eq!(binomial(1, 2), Some(0));
        assert_eq!(binomial(60, 30), Some(118264581564861424));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn main1_formulas() {
        assert_eq!(bound_main1(3, 5, 999).unwrap(), 18);
        assert_eq!(bound_main1(3, 4, 4).unwrap(), 60);
        assert_eq!(bound_main1(3, 3, 0).unwrap(), 12);
        assert_eq!(bound_main1(2, 2, 6).unwrap(), 18);
        assert!(bound_main1(1, 3, 2).is_err());
        assert!(bound_main1(3, 0, 2).is_err());
    }

    #[test]
    fn main2_formulas() {
        assert_eq!(bound_main2(3, 5, &[3, 5], 7).unwrap(), 54);
        // 1 in S: t·C(t,2)^(s-1)·Δ^q·(p+1) = 3·3·4·5
        assert_eq!(bound_main2(3, 4, &[1, 4], 4).unwrap(), 180);
        assert_eq!(bound_main2(4, 1, &[1], 9).unwrap(), 8);
        assert!(bound_main2(3, 4, &[], 4).is_err());
        assert!(bound_main2(3, 4, &[5], 4).is_err());
        assert!(bound_main2(3, 4, &[0], 4).is_err());
    }

    #[test]
    fn singleton_set_matches_main1() {
        for t in 2..6 {
            for p in 2..9u32 {
                assert_eq!(
                    bound_main2(t, p, &[p], 5).unwrap(),
                    bound_main1(t, p.into(), 5).unwrap()
                );
            }
        }
    }

    #[test]
    fn comparison_bounds() {
        // t·C(p+t-1,t)+1 with t=2, p=3: 2·C(4,2)+1 = 13
        assert_eq!(bound_tw(2, 3, 5).unwrap(), 13);
        // (t·C(p+t,t)+1)·Δ with t=2, p=2, Δ=3: (2·6+1)·3 = 39
        assert_eq!(bound_tw(2, 2, 3).unwrap(), 39);
        assert_eq!(bound_largepow_exponent(7), 3);
        assert_eq!(bound_largepow_exponent(4), 2);
    }
}
