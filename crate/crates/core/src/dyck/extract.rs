use super::{CyclicDecomposition, DyckFactor, LinearDecomposition};
use crate::boxperm::{BoxCycle, BoxWord, CyclicBoxPerm, Letter};
use crate::error::{Error, Result};
use crate::perm::{CycleSystem, Permutation};

/// +1, 0 or -1 for an up, flat or down link from `a` to `b`.
pub(crate) fn step(a: u32, b: u32, flat: bool) -> i64 {
    if flat {
        0
    } else if a < b {
        1
    } else {
        -1
    }
}

fn heights(letters: &[u32], flat: &[bool]) -> Vec<i64> {
    let mut h = vec![0i64; letters.len()];
    for i in 1..letters.len() {
        h[i] = h[i - 1] + step(letters[i - 1], letters[i], flat[i - 1]);
    }
    h
}

/// Splits a positive chain into its maximal Dyck/Motzkin factors and the
/// skeleton word, scanning left to right: the right-most letter entered by
/// a down or flat step at the lowest such height ends the first factor, the
/// left-most letter at that height left by an up or flat step starts it, and
/// the scan continues after the factor until only up steps remain.
pub(crate) fn linear_chain_factors(letters: &[u32], flat: &[bool]) -> Result<(Vec<DyckFactor>, Vec<Letter>)> {
    if heights(letters, flat).iter().any(|&h| h < 0) {
        return Err(Error::WrongClass("path goes below its starting height".into()));
    }
    let mut factors = Vec::new();
    let mut skeleton = Vec::new();
    let mut offset = 0;
    loop {
        let l = &letters[offset..];
        let f = &flat[offset.min(flat.len())..];
        let h = heights(l, f);
        let entered_low = |i: usize| i > 0 && step(l[i - 1], l[i], f[i - 1]) <= 0;
        let Some(h1) = (0..l.len()).filter(|&i| entered_low(i)).map(|i| h[i]).min() else {
            skeleton.extend(l.iter().map(|&x| Letter::Int(x)));
            break;
        };
        let end = (0..l.len()).rev().find(|&i| entered_low(i) && h[i] == h1).unwrap();
        let start = (0..end)
            .find(|&i| h[i] == h1 && step(l[i], l[i + 1], f[i]) >= 0)
            .expect("a factor end has a matching start");
        skeleton.extend(l[..start].iter().map(|&x| Letter::Int(x)));
        skeleton.extend([Letter::Int(l[start]), Letter::Box, Letter::Int(l[end])]);
        factors.push(DyckFactor::new(l[start..=end].to_vec(), f[start..end].to_vec(), None, offset + start));
        offset += end + 1;
    }
    Ok((factors, skeleton))
}

/// A step of a chain is covered when it lies inside some excursion: it is
/// flat or down, or it is up and the path later comes back to the height it
/// started from. Maximal runs of covered steps are exactly the maximal
/// factors.
fn covered_runs(steps: &[i64], heights: &[i64]) -> Vec<bool> {
    (0..steps.len())
        .map(|j| steps[j] <= 0 || heights[j + 1..].iter().any(|&h| h <= heights[j]))
        .collect()
}

/// Independent linear extraction via covered steps.
fn linear_chain_covered(letters: &[u32], flat: &[bool]) -> Result<(Vec<DyckFactor>, Vec<Letter>)> {
    let h = heights(letters, flat);
    if h.iter().any(|&x| x < 0) {
        return Err(Error::WrongClass("path goes below its starting height".into()));
    }
    let steps: Vec<i64> = (1..letters.len()).map(|i| step(letters[i - 1], letters[i], flat[i - 1])).collect();
    let cov = covered_runs(&steps, &h);
    let mut factors = Vec::new();
    let mut skeleton = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        if i < steps.len() && cov[i] {
            let mut j = i;
            while j < steps.len() && cov[j] {
                j += 1;
            }
            factors.push(DyckFactor::new(letters[i..=j].to_vec(), flat[i..j].to_vec(), None, i));
            skeleton.extend([Letter::Int(letters[i]), Letter::Box, Letter::Int(letters[j])]);
            i = j + 1;
        } else {
            skeleton.push(Letter::Int(letters[i]));
            i += 1;
        }
    }
    Ok((factors, skeleton))
}

/// Factors plus the skeleton left after replacing each factor by a box.
type Split = (Vec<DyckFactor>, Vec<Letter>);

fn linear_decomposition(p: &Permutation, f: fn(&[u32], &[bool]) -> Result<Split>) -> Result<LinearDecomposition> {
    if !p.is_ballot() {
        return Err(Error::WrongClass(format!("{p} is not a ballot permutation")));
    }
    let flat = vec![false; p.len().saturating_sub(1)];
    let (factors, skeleton) = f(p.word(), &flat)?;
    Ok(LinearDecomposition { factors, skeleton: BoxWord::new(skeleton)? })
}

pub fn extract_linear(p: &Permutation) -> Result<LinearDecomposition> {
    linear_decomposition(p, linear_chain_factors)
}

/// Same result as [`extract_linear`], computed from covered steps.
pub fn extract_linear_covered(p: &Permutation) -> Result<LinearDecomposition> {
    linear_decomposition(p, linear_chain_covered)
}

/// Maximal factors of one cycle (letters with the flag of each link, the last
/// link closing the cycle), found from covered steps. Returns the factors
/// and the skeleton cycle.
pub(crate) fn cycle_chain_factors(index: usize, letters: &[u32], flat: &[bool]) -> Result<(Vec<DyckFactor>, Vec<Letter>)> {
    let k = letters.len();
    if k == 1 {
        return Ok((Vec::new(), vec![Letter::Int(letters[0])]));
    }
    let steps: Vec<i64> = (0..k).map(|j| step(letters[j], letters[(j + 1) % k], flat[j])).collect();
    let total: i64 = steps.iter().sum();
    if total == 0 {
        return Err(Error::WrongClass(format!("cycle {letters:?} has no net rise")));
    }
    // Read against the cycle when it falls overall, so that the net change is
    // positive; reading backwards swaps up and down steps.
    let forward = total > 0;
    let step_at = |j: usize| if forward { steps[j % k] } else { -steps[(k - 1) - (j % k)] };
    let mut h = vec![0i64; 2 * k + 1];
    for m in 0..2 * k {
        h[m + 1] = h[m] + step_at(m);
    }
    let covered_read: Vec<bool> =
        (0..k).map(|j| step_at(j) <= 0 || h[j + 1..=j + k].iter().any(|&x| x <= h[j])).collect();
    // Step `j` in the original direction is read as `k - 1 - j` backwards.
    let covered: Vec<bool> =
        (0..k).map(|j| if forward { covered_read[j] } else { covered_read[k - 1 - j] }).collect();
    let first_free = (0..k).find(|&j| !covered[j]).expect("net rise leaves a step uncovered");
    let mut factors = Vec::new();
    let mut skeleton = Vec::new();
    let mut j = first_free + 1;
    let stop = first_free + 1 + k;
    while j < stop {
        let s = j % k;
        if covered[s] {
            let mut e = j;
            while covered[e % k] {
                e += 1;
            }
            let word: Vec<u32> = (j..=e).map(|i| letters[i % k]).collect();
            let fl: Vec<bool> = (j..e).map(|i| flat[i % k]).collect();
            factors.push(DyckFactor::new(word, fl, Some(index), s));
            skeleton.extend([Letter::Int(letters[s]), Letter::Box]);
            // The factor's last letter starts the next (uncovered) step.
            j = e;
        } else {
            skeleton.push(Letter::Int(letters[s]));
            j += 1;
        }
    }
    Ok((factors, skeleton))
}

fn check_odd(cs: &CycleSystem) -> Result<()> {
    match cs.cycles().iter().find(|c| c.len() % 2 == 0) {
        Some(c) => Err(Error::EvenCycle(c.len())),
        None => Ok(()),
    }
}

fn assemble(cycles: Vec<(Vec<DyckFactor>, Vec<Letter>)>) -> Result<CyclicDecomposition> {
    let mut factors = Vec::new();
    let mut skel = Vec::new();
    for (f, s) in cycles {
        factors.extend(f);
        skel.push(BoxCycle::new(s)?);
    }
    Ok(CyclicDecomposition { factors, skeleton: CyclicBoxPerm::new(skel)? })
}

/// Covered-step extraction on each cycle; agrees with [`extract_cyclic`].
pub fn extract_cyclic_covered(cs: &CycleSystem) -> Result<CyclicDecomposition> {
    check_odd(cs)?;
    let parts = cs
        .cycles()
        .iter()
        .enumerate()
        .map(|(i, c)| cycle_chain_factors(i, c, &vec![false; c.len()]))
        .collect::<Result<Vec<_>>>()?;
    assemble(parts)
}

/// Start offset (from the peak) and length of the maximal Dyck factor
/// containing the cyclic peak `c[0]` of a cycle of length `k >= 3`.
///
/// `hp[i]` is the height of `c_i` reading `c_1 c_2 ... c_i` and `hm[i]` the
/// height of `c_i` reading `c_1 c_k c_{k-1} ... c_i`, both as ascents minus
/// descents; indices are 1-based as `c_1 ... c_k`.
fn factor_at_peak(c: &[u32]) -> Option<(usize, usize)> {
    let k = c.len();
    let at = |i: usize| c[i - 1];
    let mut hp = vec![0i64; k + 1];
    for i in 2..=k {
        hp[i] = hp[i - 1] + step(at(i - 1), at(i), false);
    }
    let mut hm = vec![0i64; k + 2];
    hm[k] = step(at(1), at(k), false);
    for i in (2..k).rev() {
        hm[i] = hm[i + 1] + step(at(i + 1), at(i), false);
    }
    let min_hm_from = |l: usize| (l..=k).map(|i| hm[i]).min().unwrap();
    let min_hp_to = |r: usize| (2..=r).map(|i| hp[i]).min().unwrap();
    let (l, r) = if hp[k] >= 0 {
        let m = (2..k).map(|i| hp[i]).min()?;
        let r = (2..k).rev().find(|&i| hp[i] == m)?;
        let l = (r + 1..=k).find(|&l| hm[l] == m && hm[l] == min_hm_from(l))?;
        (l, r)
    } else {
        let m = (3..=k).map(|i| hm[i]).min()?;
        let l = (3..=k).find(|&i| hm[i] == m)?;
        let r = (2..l).rev().find(|&r| hp[r] == hm[l] && hp[r] == min_hp_to(r))?;
        (l, r)
    };
    // c_l ... c_k c_1 ... c_r
    Some((l - 1, (k - l + 1) + r))
}

fn cycle_factors_by_peaks(index: usize, c: &[u32]) -> Result<(Vec<DyckFactor>, Vec<Letter>)> {
    let k = c.len();
    if k == 1 {
        return Ok((Vec::new(), vec![Letter::Int(c[0])]));
    }
    let mut spans: Vec<(usize, usize)> = Vec::new();
    for p in 0..k {
        if !(c[(p + k - 1) % k] < c[p] && c[p] > c[(p + 1) % k]) {
            continue;
        }
        let mut rot = c.to_vec();
        rot.rotate_left(p);
        let (off, len) = factor_at_peak(&rot)
            .ok_or_else(|| Error::Overlap(format!("no factor found at peak {} of {c:?}", c[p])))?;
        let span = ((p + off) % k, len);
        if !spans.contains(&span) {
            spans.push(span);
        }
    }
    spans.sort_unstable();
    let mut used = vec![false; k];
    for &(s, len) in &spans {
        for i in s..s + len {
            if std::mem::replace(&mut used[i % k], true) {
                return Err(Error::Overlap(format!("maximal factors of {c:?} share the letter {}", c[i % k])));
            }
        }
    }
    let mut factors = Vec::new();
    let mut skeleton = Vec::new();
    let mut i = 0;
    // Walk once around the cycle starting at a letter outside every factor
    // interior: the start of a factor, or any unused letter.
    let origin = spans.first().map_or(0, |&(s, _)| s);
    while i < k {
        let pos = (origin + i) % k;
        if let Some(&(s, len)) = spans.iter().find(|&&(s, _)| s == pos) {
            let word: Vec<u32> = (s..s + len).map(|j| c[j % k]).collect();
            factors.push(DyckFactor::new(word, vec![false; len - 1], Some(index), s));
            skeleton.extend([Letter::Int(c[s]), Letter::Box]);
            i += len - 1;
        } else {
            skeleton.push(Letter::Int(c[pos]));
            i += 1;
        }
    }
    Ok((factors, skeleton))
}

/// Extracts the maximal Dyck factors of every cycle, locating the factor
/// through each cyclic peak from the two height sequences read forwards and
/// backwards from the peak, and replaces each factor interior by a box.
/// Factors found from different peaks of a cycle must coincide or be
/// disjoint; anything else is reported as [`Error::Overlap`].
pub fn extract_cyclic(cs: &CycleSystem) -> Result<CyclicDecomposition> {
    check_odd(cs)?;
    let parts = cs
        .cycles()
        .iter()
        .enumerate()
        .map(|(i, c)| cycle_factors_by_peaks(i, c))
        .collect::<Result<Vec<_>>>()?;
    assemble(parts)
}
