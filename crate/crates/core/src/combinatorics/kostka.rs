use std::collections::HashMap;
use std::sync::OnceLock;

use parking_lot::RwLock;

use super::partition::Partition;
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<(Partition, Vec<usize>), u64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Partitions `ν ⊆ λ` with `λ/ν` a horizontal strip of `m` boxes.
pub fn horizontal_strips(lambda: &Partition, m: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for nu_i in lo..=hi {
            let used = hi - nu_i;
            if used > left {
                continue;
            }
            cur.push(nu_i);
            rec(lambda, i + 1, left - used, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `λ` and content `μ` (any order
/// of the content entries, zeros allowed).
pub fn kostka_content(lambda: &Partition, content: &[usize]) -> u64 {
    if content.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    let Some((&last, rest)) = content.split_last() else {
        return 1;
    };
    let key = (lambda.clone(), content.to_vec());
    if let Some(&v) = memo().read().get(&key) {
        return v;
    }
    let v = horizontal_strips(lambda, last).iter().map(|nu| kostka_content(nu, rest)).sum();
    memo().write().insert(key, v);
    v
}

pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    Ok(kostka_content(lambda, mu.parts()))
}
