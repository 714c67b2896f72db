use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::perm;
use crate::error::{Error, Result};

/// Index `(A, B, w)` of a standard basis element `T_A P_k T_w T_B^{-1}`.
///
/// `A` and `B` are sorted `k`-subsets of `{1..n}`; `w` is an image list of
/// length `n` fixing `1..k`. `Ord` is the canonical enumeration order:
/// `k`, then `A`, `B`, `w` lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub w: Vec<usize>,
}

impl BasisIndex {
    pub fn new(a: Vec<usize>, b: Vec<usize>, w: Vec<usize>) -> Result<Self> {
        let idx = Self { a, b, w };
        idx.validate()?;
        Ok(idx)
    }

    pub fn identity(n: usize) -> Self {
        Self { a: vec![], b: vec![], w: perm::identity(n) }
    }

    /// The index of `P_k`.
    pub fn p(n: usize, k: usize) -> Self {
        Self { a: (1..=k).collect(), b: (1..=k).collect(), w: perm::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let bad = |msg: &str| Err(Error::InvalidIndex(format!("{self}: {msg}")));
        if self.a.len() != self.b.len() {
            return bad("|A| != |B|");
        }
        for set in [&self.a, &self.b] {
            if set.windows(2).any(|p| p[0] >= p[1]) || set.iter().any(|&x| x == 0 || x > n) {
                return bad("subsets must be strictly increasing within 1..n");
            }
        }
        let mut seen = vec![false; n + 1];
        for &x in &self.w {
            if x == 0 || x > n || seen[x] {
                return bad("w is not a permutation");
            }
            seen[x] = true;
        }
        if (1..=self.k()).any(|i| self.w[i - 1] != i) {
            return bad("w must fix 1..k");
        }
        Ok(())
    }
}

impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k(), &self.a, &self.b, &self.w).cmp(&(other.k(), &other.a, &other.b, &other.w))
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={};B={};w={}", join(&self.a), join(&self.b), join(&self.w))
    }
}

impl fmt::Debug for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}},{{{}}},[{}])", join(&self.a), join(&self.b), join(&self.w))
    }
}

impl FromStr for BasisIndex {
    type Err = Error;

    /// Parses `"A=1,2;B=1,3;w=1,2,3"` (empty sets allowed as `A=`).
    fn from_str(s: &str) -> Result<Self> {
        let (mut a, mut b, mut w) = (None, None, None);
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, val) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {field:?}")))?;
            let nums = val
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {t:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let slot = match key.trim() {
                "A" => &mut a,
                "B" => &mut b,
                "w" => &mut w,
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            };
            *slot = Some(nums);
        }
        let (Some(a), Some(b), Some(w)) = (a, b, w) else {
            return Err(Error::Parse(format!("index {s:?} needs A, B and w")));
        };
        Self::new(a, b, w).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The standard basis index set of rank `n`, in canonical order.
pub fn standard_basis(n: usize) -> Vec<BasisIndex> {
    basis_iter(n).collect()
}

/// Lazy form of [`standard_basis`].
pub fn basis_iter(n: usize) -> impl Iterator<Item = BasisIndex> {
    (0..=n).flat_map(move |k| {
        let sets = perm::subsets(n, k);
        let perms = perm::fixing_prefix(n, k);
        let pairs: Vec<(Vec<usize>, Vec<usize>)> =
            sets.iter().flat_map(|a| sets.iter().map(move |b| (a.clone(), b.clone()))).collect();
        pairs.into_iter().flat_map(move |(a, b)| {
            perms.clone().into_iter().map(move |w| BasisIndex { a: a.clone(), b: b.clone(), w })
        })
    })
}

/// `Σ_k C(n,k)^2 k!`.
pub fn dimension(n: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    let mut fact = BigUint::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n + 1 - k) / k;
            fact *= k;
        }
        total += &binom * &binom * &fact;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        assert_eq!(standard_basis(1).len(), 2);
        assert_eq!(standard_basis(2).len(), 7);
        for n in 1..=6 {
            let basis = standard_basis(n);
            assert_eq!(BigUint::from(basis.len()), dimension(n));
            assert!(basis.windows(2).all(|p| p[0] < p[1]));
            assert!(basis.iter().all(|i| i.validate().is_ok()));
        }
        assert_eq!((1..=5).map(dimension).collect::<Vec<_>>(), [2u32, 7, 34, 209, 1546].map(BigUint::from).to_vec());
    }

    #[test]
    fn parse_render_and_json() {
        let idx: BasisIndex = "A=2;B=1;w=1,2".parse().unwrap();
        assert_eq!(idx.to_string(), "A=2;B=1;w=1,2");
        let json = serde_json::to_string(&idx).unwrap();
        assert_eq!(json, r#"{"A":[2],"B":[1],"w":[1,2]}"#);
        assert_eq!(serde_json::from_str::<BasisIndex>(&json).unwrap(), idx);
        let empty: BasisIndex = "A=;B=;w=2,1".parse().unwrap();
        assert_eq!(empty.k(), 0);
        assert!("A=1;B=;w=1,2".parse::<BasisIndex>().is_err());
        assert!("A=1;B=1;w=2,1".parse::<BasisIndex>().is_err());
    }
}
