//! Integer partitions, stored smallest part first.

/// All partitions of `n` with positive parts listed in weakly increasing
/// order. The empty partition is the only partition of 0.
///
/// Output order is deterministic: lexicographic on the part sequence.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(n, 1, &mut current, &mut out);
    out
}

fn extend(remaining: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in min_part..=remaining {
        // A part that leaves a nonzero remainder smaller than itself can't be followed.
        let rest = remaining - part;
        if rest != 0 && rest < part {
            continue;
        }
        current.push(part);
        extend(rest, part, current, out);
        current.pop();
    }
}

/// Number of partitions of each integer `0..=n`.
pub fn partition_counts(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            counts[total] += counts[total - part];
        }
    }
    counts
}
