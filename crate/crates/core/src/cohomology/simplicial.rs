use crate::lattice::rational_rank_i64;

/// Dimensions of reduced cohomology `H~^k` for `k = -1 ..= top`, indexed
/// from 0 (so entry 0 is `H~^{-1}`).
///
/// `faces` must be closed under taking subsets; the empty face is implied.
/// Each face is a sorted list of vertex labels.
pub fn reduced_cohomology(faces: &[Vec<usize>], top: usize) -> Vec<usize> {
    // by_size[k] holds the faces with k vertices, k = 0 ..= top + 1
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 2];
    by_size[0].push(&EMPTY);
    for f in faces {
        if !f.is_empty() && f.len() <= top + 1 {
            by_size[f.len()].push(f);
        }
    }
    for v in by_size.iter_mut() {
        v.sort();
        v.dedup();
    }
    // rank of the boundary from size k faces to size k-1 faces
    let mut ranks = vec![0usize; top + 3];
    for k in 1..=top + 1 {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<i64>> = by_size[k]
            .iter()
            .map(|f| {
                let mut row = vec![0i64; by_size[k - 1].len()];
                for skip in 0..f.len() {
                    let g: Vec<usize> = f.iter().enumerate().filter(|(p, _)| *p != skip).map(|(_, &v)| v).collect();
                    let idx = by_size[k - 1].binary_search(&&g).expect("face closure");
                    row[idx] = if skip % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        ranks[k] = rational_rank_i64(&rows);
    }
    (0..=top + 1).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

static EMPTY: Vec<usize> = Vec::new();
