use super::partition::Partition;

/// Littlewood-Richardson coefficient `c^nu_{lam,mu}`: the number of
/// semistandard skew tableaux of shape `nu/lam` and content `mu` whose reverse
/// reading word (rows top to bottom, each right to left) is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lam.size() + mu.size() || !nu.contains(lam) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let rows = nu.len();
    // Cells in reading order, with a tableau stored row by row.
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lam.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; nu.part(r)]).collect();
    let mut count = vec![0usize; mu.len() + 1];
    fill_cells(0, &cells, lam, mu, &mut fill, &mut count)
}

fn fill_cells(
    idx: usize,
    cells: &[(usize, usize)],
    lam: &Partition,
    mu: &Partition,
    fill: &mut Vec<Vec<usize>>,
    count: &mut Vec<usize>,
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (r, c) = cells[idx];
    // Rows weakly increase left to right: bounded by the right neighbour.
    let hi = if c + 1 < fill[r].len() {
        fill[r][c + 1]
    } else {
        mu.len()
    };
    // Columns strictly increase downwards: above the cell in the skew shape.
    let lo = if r > 0 && c >= lam.part(r - 1) {
        fill[r - 1][c] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lo..=hi.min(mu.len()) {
        if count[v] == mu.part(v - 1) || (v > 1 && count[v] + 1 > count[v - 1]) {
            continue;
        }
        count[v] += 1;
        fill[r][c] = v;
        total += fill_cells(idx + 1, cells, lam, mu, fill, count);
        count[v] -= 1;
    }
    fill[r][c] = 0;
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::partition::partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[3]), &p(&[3, 3])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn pieri_rule() {
        // c^nu_{lam,(k)} = 1 iff nu/lam is a horizontal strip of size k.
        for d in 0..6 {
            for lam in partitions(d) {
                for k in 0..4 {
                    for nu in partitions(d + k) {
                        let strip = nu.contains(&lam) && (0..nu.len()).all(|i| i == 0 || nu.part(i) <= lam.part(i - 1));
                        let want = u64::from(strip);
                        let row = if k == 0 { Partition::empty() } else { p(&[k]) };
                        assert_eq!(lr_coefficient(&lam, &row, &nu), want, "{lam} {k} {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_in_lam_and_mu() {
        for d in 0..=8 {
            for nu in partitions(d) {
                for a in 0..=d {
                    for lam in partitions(a) {
                        for mu in partitions(d - a) {
                            assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&mu, &lam, &nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        for d in 0..=6 {
            for nu in partitions(d) {
                for a in 0..=d {
                    for lam in partitions(a) {
                        for mu in partitions(d - a) {
                            assert_eq!(
                                lr_coefficient(&lam, &mu, &nu),
                                lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
                            );
                        }
                    }
                }
            }
        }
    }
}
