use serde::Serialize;

use crate::set::VertexSet;

/// A duplicate-free family of vertex sets kept in canonical order
/// (cardinality, then bit-pattern value), so equal families compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    universe: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: usize, members: I) -> Self {
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        assert!(
            members.iter().all(|s| s.universe() == universe),
            "family member outside universe of size {universe}"
        );
        members.sort_unstable();
        members.dedup();
        Self { universe, members }
    }

    /// Convenience for hand-written families: `from_lists(3, &[&[], &[0, 1]])`.
    pub fn from_lists(universe: usize, lists: &[&[usize]]) -> Self {
        Self::new(
            universe,
            lists
                .iter()
                .map(|l| VertexSet::from_indices(universe, l.iter().copied())),
        )
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    /// Members of cardinality `k`, a contiguous run in canonical order.
    pub fn of_size(&self, k: usize) -> &[VertexSet] {
        let lo = self.members.partition_point(|s| s.len() < k);
        let hi = self.members.partition_point(|s| s.len() <= k);
        &self.members[lo..hi]
    }

    /// Smallest cardinality among nonempty members.
    pub fn min_nonempty_size(&self) -> Option<usize> {
        self.members.iter().map(VertexSet::len).find(|&k| k > 0)
    }

    /// Members present in exactly one of the two families, canonical order.
    pub fn symmetric_difference<'a>(&'a self, other: &'a SetFamily) -> Vec<&'a VertexSet> {
        let mut out: Vec<&VertexSet> = self
            .members
            .iter()
            .filter(|s| !other.contains(s))
            .chain(other.members.iter().filter(|s| !self.contains(s)))
            .collect();
        out.sort();
        out
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_deduplicated() {
        let a = SetFamily::from_lists(4, &[&[1, 2], &[0], &[], &[3], &[0], &[0, 3]]);
        let b = SetFamily::from_lists(4, &[&[0, 3], &[3], &[1, 2], &[], &[0]]);
        assert_eq!(a, b);
        let rendered: Vec<String> = a.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{}", "{0}", "{3}", "{1,2}", "{0,3}"]);
        assert_eq!(a.of_size(1).len(), 2);
        assert_eq!(a.of_size(3).len(), 0);
        assert_eq!(a.min_nonempty_size(), Some(1));
    }

    #[test]
    fn symmetric_difference_lists_both_sides() {
        let a = SetFamily::from_lists(3, &[&[], &[0], &[1]]);
        let b = SetFamily::from_lists(3, &[&[], &[1], &[2]]);
        let d: Vec<String> = a
            .symmetric_difference(&b)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(d, ["{0}", "{2}"]);
    }
}
