//! Direct enumeration of all box-permutations and all cyclic
//! box-permutations on a support, built from the definitions alone.

use super::{BoxCycle, BoxWord, CyclicBoxPerm, Letter};

/// Every ordered sequence of disjoint nonempty blocks covering `items`.
fn ordered_set_partitions(items: &[u32], out: &mut Vec<Vec<Vec<u32>>>, cur: &mut Vec<Vec<u32>>) {
    if items.is_empty() {
        out.push(cur.clone());
        return;
    }
    let n = items.len();
    for mask in 1u32..(1 << n) {
        let block: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        let rest: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| items[i]).collect();
        cur.push(block);
        ordered_set_partitions(&rest, out, cur);
        cur.pop();
    }
}

/// Every unordered partition of `items` into blocks, each block containing
/// its smallest element first.
fn set_partitions(items: &[u32], min_block: usize, out: &mut Vec<Vec<Vec<u32>>>, cur: &mut Vec<Vec<u32>>) {
    let Some((&first, rest)) = items.split_first() else {
        out.push(cur.clone());
        return;
    };
    let n = rest.len();
    for mask in 0u32..(1 << n) {
        let mut block = vec![first];
        block.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]));
        if block.len() < min_block {
            continue;
        }
        let others: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
        cur.push(block);
        set_partitions(&others, min_block, out, cur);
        cur.pop();
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// All box-permutations on `support`, sorted.
pub fn box_words(support: &[u32]) -> Vec<BoxWord> {
    let mut parts = Vec::new();
    ordered_set_partitions(support, &mut parts, &mut Vec::new());
    let mut out = Vec::new();
    for blocks in parts {
        let r = blocks.len();
        let ok = r <= 1 || blocks[1..r - 1].iter().all(|b| b.len() >= 2);
        if !ok {
            continue;
        }
        let mut letters = Vec::new();
        for (i, mut b) in blocks.into_iter().enumerate() {
            if i > 0 {
                letters.push(Letter::Box);
            }
            b.sort_unstable();
            letters.extend(b.into_iter().map(Letter::Int));
        }
        out.push(BoxWord::new(letters).expect("constructed box word is valid"));
    }
    out.sort();
    out
}

/// All single box-cycles whose integers are exactly `block`.
fn box_cycles(block: &[u32]) -> Vec<BoxCycle> {
    if block.len() == 1 {
        return vec![BoxCycle::fixed_point(block[0])];
    }
    let mut runs_choices = Vec::new();
    set_partitions(block, 2, &mut runs_choices, &mut Vec::new());
    let mut out = Vec::new();
    for runs in runs_choices {
        if (block.len() + runs.len()).is_multiple_of(2) {
            continue;
        }
        // Fix the run holding the smallest letter first; order the others.
        for order in permutations(&runs[1..]) {
            for reverse in [false, true] {
                let mut letters = Vec::new();
                for run in std::iter::once(&runs[0]).chain(order.iter()) {
                    let mut run = run.clone();
                    run.sort_unstable();
                    if reverse {
                        run.reverse();
                    }
                    letters.extend(run.into_iter().map(Letter::Int));
                    letters.push(Letter::Box);
                }
                out.push(BoxCycle::new(letters).expect("constructed box-cycle is valid"));
            }
        }
    }
    out
}

/// All cyclic box-permutations on `support`, sorted.
pub fn cyclic_box_perms(support: &[u32]) -> Vec<CyclicBoxPerm> {
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    let mut parts = Vec::new();
    set_partitions(&sorted, 1, &mut parts, &mut Vec::new());
    let mut out = Vec::new();
    for blocks in parts {
        let choices: Vec<Vec<BoxCycle>> = blocks.iter().map(|b| box_cycles(b)).collect();
        let mut acc: Vec<Vec<BoxCycle>> = vec![Vec::new()];
        for options in &choices {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|cs| CyclicBoxPerm::new(cs).expect("disjoint blocks")));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_letters() {
        let words: Vec<String> = box_words(&[1, 2, 3]).iter().map(|w| w.to_string()).collect();
        let mut want = vec!["1 2 3", "1 # 2 3", "2 # 1 3", "3 # 1 2", "1 2 # 3", "1 3 # 2", "2 3 # 1"];
        want.sort();
        let mut got = words.clone();
        got.sort();
        assert_eq!(got, want);

        let cyc: Vec<CyclicBoxPerm> = cyclic_box_perms(&[1, 2, 3]);
        let mut want: Vec<CyclicBoxPerm> = ["(1)(2)(3)", "(1)(2 3 #)", "(1)(3 2 #)", "(2)(1 3 #)", "(2)(3 1 #)", "(3)(1 2 #)", "(3)(2 1 #)"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        want.sort();
        assert_eq!(cyc, want);
    }

    #[test]
    fn no_duplicates() {
        let s = [2, 3, 5, 7, 8];
        let w = box_words(&s);
        let c = cyclic_box_perms(&s);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(c.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(w.len(), c.len());
    }
}
