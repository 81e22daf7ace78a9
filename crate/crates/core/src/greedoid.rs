//! Greedoid axioms over a [`SetFamily`]: accessibility and exchange, with
//! canonically smallest counterexamples.
//!
//! Families are required to contain ∅. With accessibility in force this is
//! the same as asking for a non-empty family, and it gives exchange a
//! uniform base case.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::family::SetFamily;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedoidError {
    #[error("the family does not contain the empty set")]
    MissingEmptySet,
    #[error("{0} is not a member of the family")]
    NotMember(VertexSet),
    #[error("no single vertex can be removed from {0} while staying in the family")]
    Stuck(VertexSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GreedoidStatus {
    Greedoid,
    AccessibilityFail,
    ExchangeFail,
}

/// Outcome of a greedoid check.
///
/// `AccessibilityFail` carries the failing member in `witness_x`;
/// `ExchangeFail` carries `X` and `Y` with `|X| = |Y| + 1` such that no
/// `x ∈ X − Y` gives `Y ∪ {x}` in the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedoidVerdict {
    pub status: GreedoidStatus,
    pub witness_x: Option<VertexSet>,
    pub witness_y: Option<VertexSet>,
}

impl GreedoidVerdict {
    fn pass() -> Self {
        Self {
            status: GreedoidStatus::Greedoid,
            witness_x: None,
            witness_y: None,
        }
    }

    pub fn is_greedoid(&self) -> bool {
        self.status == GreedoidStatus::Greedoid
    }

    pub fn report(&self, family: &SetFamily) -> VerdictReport {
        VerdictReport {
            status: self.status,
            witness_x: self.witness_x.clone(),
            witness_y: self.witness_y.clone(),
            family_size: family.len(),
            universe: family.universe(),
        }
    }
}

/// JSON shape of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub status: GreedoidStatus,
    pub witness_x: Option<VertexSet>,
    pub witness_y: Option<VertexSet>,
    pub family_size: usize,
    pub universe: usize,
}

fn require_empty(f: &SetFamily) -> Result<(), GreedoidError> {
    match f.members().first() {
        Some(s) if s.is_empty() => Ok(()),
        _ => Err(GreedoidError::MissingEmptySet),
    }
}

fn is_accessible(f: &SetFamily, x: &VertexSet) -> bool {
    x.iter().any(|v| f.contains(&x.without(v)))
}

/// Accessibility: every nonempty member loses some vertex and stays a member.
pub fn check_accessibility(f: &SetFamily) -> Result<GreedoidVerdict, GreedoidError> {
    require_empty(f)?;
    let failing = f
        .members()
        .par_iter()
        .skip(1)
        .find_first(|x| !is_accessible(f, x));
    Ok(match failing {
        None => GreedoidVerdict::pass(),
        Some(x) => GreedoidVerdict {
            status: GreedoidStatus::AccessibilityFail,
            witness_x: Some(x.clone()),
            witness_y: None,
        },
    })
}

/// Exchange: for members with `|X| = |Y| + 1` some `x ∈ X - Y` has
/// `Y ∪ {x}` a member. Pairs are scanned with `X` then `Y` in canonical order.
pub fn check_exchange(f: &SetFamily) -> Result<GreedoidVerdict, GreedoidError> {
    require_empty(f)?;
    let members = f.members();
    // ext[j]: vertices v outside members[j] with members[j] ∪ {v} in the family.
    let ext: Vec<VertexSet> = members
        .par_iter()
        .map(|y| {
            let outside = VertexSet::full(f.universe()).difference(y);
            VertexSet::from_indices(
                f.universe(),
                outside.iter().filter(|&v| f.contains(&y.with(v))),
            )
        })
        .collect();
    let failing = members.par_iter().skip(1).find_map_first(|x| {
        let k = x.len() - 1;
        let lo = members.partition_point(|s| s.len() < k);
        let hi = members.partition_point(|s| s.len() <= k);
        (lo..hi)
            .find(|&j| x.is_disjoint(&ext[j]))
            .map(|j| (x.clone(), members[j].clone()))
    });
    Ok(match failing {
        None => GreedoidVerdict::pass(),
        Some((x, y)) => GreedoidVerdict {
            status: GreedoidStatus::ExchangeFail,
            witness_x: Some(x),
            witness_y: Some(y),
        },
    })
}

/// Both axioms, accessibility first.
pub fn is_greedoid(f: &SetFamily) -> Result<GreedoidVerdict, GreedoidError> {
    let access = check_accessibility(f)?;
    if !access.is_greedoid() {
        return Ok(access);
    }
    check_exchange(f)
}

/// A chain `∅ ⊂ S₁ ⊂ … ⊂ S_k = s` of members with `|S_j| = j`.
///
/// Built by peeling `s` down one vertex at a time, always removing the
/// largest-index vertex whose removal stays in the family, so the chain
/// grows by the smallest available indices first.
pub fn accessibility_chain(f: &SetFamily, s: &VertexSet) -> Result<Vec<VertexSet>, GreedoidError> {
    require_empty(f)?;
    if !f.contains(s) {
        return Err(GreedoidError::NotMember(s.clone()));
    }
    let mut chain = vec![s.clone()];
    let mut current = s.clone();
    while !current.is_empty() {
        let v = current
            .to_vec()
            .into_iter()
            .rev()
            .find(|&v| f.contains(&current.without(v)))
            .ok_or_else(|| GreedoidError::Stuck(current.clone()))?;
        current.remove(v);
        chain.push(current.clone());
    }
    chain.reverse();
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fam(n: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(n, lists)
    }

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn boolean_lattice_is_greedoid() {
        let f = fam(2, &[&[], &[0], &[1], &[0, 1]]);
        assert!(is_greedoid(&f).unwrap().is_greedoid());
    }

    #[test]
    fn exchange_failure_is_reported() {
        // Accessibility fails first on {1,2}; exchange alone fails on ({1,2}, {0}).
        let f = fam(3, &[&[], &[0], &[1, 2]]);
        let v = check_exchange(&f).unwrap();
        assert_eq!(v.status, GreedoidStatus::ExchangeFail);
        assert_eq!(v.witness_x, Some(set(3, &[1, 2])));
        assert_eq!(v.witness_y, Some(set(3, &[0])));
        assert_eq!(
            is_greedoid(&f).unwrap().status,
            GreedoidStatus::AccessibilityFail
        );
    }

    #[test]
    fn accessible_but_not_exchange() {
        // {0},{1} both present but {0,1} absent while {1,2} present: X={1,2}, Y={0}.
        let f = fam(3, &[&[], &[0], &[1], &[1, 2]]);
        let v = is_greedoid(&f).unwrap();
        assert_eq!(v.status, GreedoidStatus::ExchangeFail);
        assert_eq!(v.witness_x, Some(set(3, &[1, 2])));
        assert_eq!(v.witness_y, Some(set(3, &[0])));
    }

    #[test]
    fn empty_set_is_required() {
        let f = fam(2, &[&[0], &[0, 1]]);
        assert_eq!(is_greedoid(&f), Err(GreedoidError::MissingEmptySet));
        assert_eq!(check_exchange(&f), Err(GreedoidError::MissingEmptySet));
    }

    #[test]
    fn chains() {
        let f = fam(3, &[&[], &[0], &[1], &[0, 1], &[0, 1, 2]]);
        let chain = accessibility_chain(&f, &set(3, &[0, 1, 2])).unwrap();
        let shown: Vec<String> = chain.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{0}", "{0,1}", "{0,1,2}"]);
        assert_eq!(
            accessibility_chain(&f, &set(3, &[])).unwrap(),
            vec![set(3, &[])]
        );
        assert_eq!(
            accessibility_chain(&f, &set(3, &[2])),
            Err(GreedoidError::NotMember(set(3, &[2])))
        );
        let g = fam(3, &[&[], &[1, 2]]);
        assert_eq!(
            accessibility_chain(&g, &set(3, &[1, 2])),
            Err(GreedoidError::Stuck(set(3, &[1, 2])))
        );
    }

    #[test]
    fn verdict_json_shape() {
        let f = fam(3, &[&[], &[1, 2]]);
        let v = is_greedoid(&f).unwrap();
        let json = serde_json::to_string(&v.report(&f)).unwrap();
        assert_eq!(
            json,
            r#"{"status":"ACCESSIBILITY_FAIL","witness_x":[1,2],"witness_y":null,"family_size":2,"universe":3}"#
        );
    }

    /// Exchange straight from the definition, first failing pair in canonical order.
    fn exchange_by_definition(f: &SetFamily) -> Option<(VertexSet, VertexSet)> {
        for x in f.iter() {
            for y in f.iter().filter(|y| y.len() + 1 == x.len()) {
                if !x.difference(y).iter().any(|v| f.contains(&y.with(v))) {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }

    proptest! {
        #[test]
        fn exchange_matches_definition(n in 1usize..=5, masks in proptest::collection::vec(any::<u64>(), 0..20)) {
            let f = SetFamily::new(
                n,
                std::iter::once(VertexSet::empty(n))
                    .chain(masks.iter().map(|m| VertexSet::from_mask(n, m & ((1 << n) - 1)))),
            );
            let v = check_exchange(&f).unwrap();
            let expected = exchange_by_definition(&f);
            prop_assert_eq!(v.is_greedoid(), expected.is_none());
            if let Some((x, y)) = expected {
                prop_assert_eq!(v.witness_x, Some(x));
                prop_assert_eq!(v.witness_y, Some(y));
            }
        }
    }
}
