use serde::Serialize;

use super::partition::Partition;
use crate::error::{Error, Result};

/// Decomposition of a skew shape `λ/ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewStripData {
    pub is_strip: bool,
    pub size: usize,
    pub cc: usize,
    /// `(rows, columns)` occupied by each edge-connected component, ordered
    /// by topmost row.
    pub components: Vec<(usize, usize)>,
}

/// Boxes `(row, col)` of `λ/ν`, 0-based, row by row.
pub fn skew_boxes(lambda: &Partition, nu: &Partition) -> Vec<(usize, usize)> {
    (0..lambda.len()).flat_map(|i| (nu.part(i)..lambda.part(i)).map(move |j| (i, j))).collect()
}

pub fn strip_data(lambda: &Partition, nu: &Partition) -> Result<SkewStripData> {
    if !lambda.contains(nu) {
        return Err(Error::NotContained { inner: nu.to_string(), outer: lambda.to_string() });
    }
    let boxes = skew_boxes(lambda, nu);
    let inside = |i: usize, j: usize| j >= nu.part(i) && j < lambda.part(i);
    let has_block = boxes.iter().any(|&(i, j)| inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1));

    // Union-find over edge-adjacent boxes.
    let index = |i: usize, j: usize| boxes.iter().position(|&b| b == (i, j));
    let mut parent: Vec<usize> = (0..boxes.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (a, &(i, j)) in boxes.iter().enumerate() {
        for (ni, nj) in [(i + 1, j), (i, j + 1)] {
            if let Some(b) = index(ni, nj) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (a, &bx) in boxes.iter().enumerate() {
        let root = find(&mut parent, a);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, g)) => g.push(bx),
            None => groups.push((root, vec![bx])),
        }
    }
    let components = groups
        .into_iter()
        .map(|(_, g)| {
            let mut rows: Vec<usize> = g.iter().map(|b| b.0).collect();
            let mut cols: Vec<usize> = g.iter().map(|b| b.1).collect();
            rows.dedup();
            cols.sort_unstable();
            cols.dedup();
            (rows.len(), cols.len())
        })
        .collect::<Vec<_>>();
    Ok(SkewStripData { is_strip: !has_block, size: boxes.len(), cc: components.len(), components })
}

/// Every partition contained in `λ`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        for p in 0..=lambda.part(i).min(cap) {
            cur.push(p);
            rec(lambda, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_row_and_block() {
        let d = strip_data(&p("2"), &p("")).unwrap();
        assert_eq!(d, SkewStripData { is_strip: true, size: 2, cc: 1, components: vec![(1, 2)] });
        assert!(!strip_data(&p("2.2"), &p("")).unwrap().is_strip);
    }

    #[test]
    fn corner_touching_boxes_are_separate() {
        let d = strip_data(&p("2.1.1"), &p("1")).unwrap();
        assert!(d.is_strip);
        assert_eq!(d.size, 3);
        assert_eq!(d.components, vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn empty_shape_and_containment() {
        let d = strip_data(&p("3.1"), &p("3.1")).unwrap();
        assert_eq!((d.is_strip, d.size, d.cc), (true, 0, 0));
        assert!(strip_data(&p("2"), &p("1.1")).is_err());
    }

    #[test]
    fn subpartition_count() {
        // Lattice paths in a 2x2 box.
        assert_eq!(subpartitions(&p("2.2")).len(), 6);
        assert_eq!(subpartitions(&p("")).len(), 1);
    }
}
