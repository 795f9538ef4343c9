/// All partitions of `n` as weakly decreasing part lists, in reverse
/// lexicographic order (`[n]` first).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// Tuples of partitions, one per vertex, of total size at most `bound`.
pub fn multipartitions(r: usize, bound: u32) -> Vec<Vec<Vec<u32>>> {
    let by_size: Vec<Vec<Vec<u32>>> = (0..=bound).map(partitions).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    extend(r, bound, &by_size, &mut cur, &mut out);
    out
}

fn extend(
    r: usize,
    budget: u32,
    by_size: &[Vec<Vec<u32>>],
    cur: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for size in 0..=budget {
        for p in &by_size[size as usize] {
            cur.push(p.clone());
            extend(r, budget - size, by_size, cur, out);
            cur.pop();
        }
    }
}
