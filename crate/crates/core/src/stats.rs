//! Partition statistics: the crank, the `j`-mex and the generalized Durfee index `d_j`.

use crate::partition::Partition;

/// Number of parts equal to 1.
pub fn omega(lam: &Partition) -> usize {
    lam.parts().iter().rev().take_while(|&&p| p == 1).count()
}

/// Number of parts strictly greater than [`omega`].
pub fn eta(lam: &Partition) -> usize {
    let w = omega(lam);
    lam.parts().iter().take_while(|&&p| p as usize > w).count()
}

/// Dyson's crank: the largest part when there are no ones, otherwise
/// `eta - omega`. The crank of the empty partition is 0.
pub fn crank(lam: &Partition) -> i64 {
    match omega(lam) {
        0 => lam.largest() as i64,
        w => eta(lam) as i64 - w as i64,
    }
}

/// Smallest integer greater than `j` that is not a part.
pub fn mex_j(j: u32, lam: &Partition) -> u32 {
    // parts above j in increasing order
    let mut want = j + 1;
    for &p in lam.parts().iter().rev().skip_while(|&&p| p <= j) {
        if p == want {
            want += 1;
        } else if p > want {
            break;
        }
    }
    want
}

/// Membership in `M_j`: the `j`-mex and `j` have different parities.
pub fn in_m_j(j: u32, lam: &Partition) -> bool {
    (mex_j(j, lam) - j) % 2 == 1
}

/// `d_j = max { i ∈ 0..=ℓ : λ_i - i ≥ j }` with `λ_0 = ∞`.
pub fn d_j(j: u32, lam: &Partition) -> usize {
    let j = j as i64;
    // λ_i - i is strictly decreasing in i
    (1..=lam.len())
        .take_while(|&i| lam.hook_offset(i) >= j)
        .last()
        .unwrap_or(0)
}

/// Membership in `F_j`: no index `i ≥ 1` has `λ_i - i = j`.
pub fn in_f_j(j: u32, lam: &Partition) -> bool {
    let d = d_j(j, lam);
    d == 0 || lam.hook_offset(d) != j as i64
}

/// Membership in `P̄_j`. Zero counts as a part of every partition.
pub fn has_part(j: u32, lam: &Partition) -> bool {
    j == 0 || lam.contains_part(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn omega_and_eta() {
        assert_eq!(omega(&partition![]), 0);
        assert_eq!(omega(&partition![13, 10, 9, 9, 4, 3, 2, 2, 1, 1]), 2);
        let row1 = partition![12, 9, 8, 8, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1];
        assert_eq!(omega(&row1), 6);
        assert_eq!(eta(&row1), 4);
        assert_eq!(eta(&partition![]), 0);
        assert_eq!(
            eta(&partition![10, 7, 7, 7, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1]),
            1
        );
    }

    #[test]
    fn crank_examples() {
        assert_eq!(crank(&partition![]), 0);
        assert_eq!(crank(&partition![12, 9, 7, 6, 5, 5, 4, 2, 1, 1, 1, 1]), 2);
        assert_eq!(
            crank(&partition![11, 8, 8, 5, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1]),
            -3
        );
        assert_eq!(crank(&partition![2, 2]), 2);
        assert_eq!(crank(&partition![1]), -1);
    }

    #[test]
    fn mex_examples() {
        let p = partition![5, 3, 2, 2];
        for j in 0..6 {
            assert_eq!(mex_j(j, &partition![]), j + 1);
        }
        assert_eq!(mex_j(0, &p), 1);
        assert_eq!(mex_j(1, &p), 4);
        assert_eq!(mex_j(2, &p), 4);
        assert_eq!(mex_j(3, &p), 4);
        assert_eq!(mex_j(4, &p), 6);
        for j in 5..12 {
            assert_eq!(mex_j(j, &p), j + 1);
        }
    }

    #[test]
    fn m_j_membership() {
        let p = partition![5, 3, 2, 2];
        let expected = [true, true, false, true, false, true, true, true];
        for (j, &e) in expected.iter().enumerate() {
            assert_eq!(in_m_j(j as u32, &p), e, "j={j}");
        }
        for j in 0..5 {
            assert!(in_m_j(j, &partition![]));
        }
    }

    #[test]
    fn d_j_examples() {
        let p = partition![5, 3, 2, 2];
        let expected = [2, 2, 1, 1, 1, 0, 0, 0];
        for (j, &e) in expected.iter().enumerate() {
            assert_eq!(d_j(j as u32, &p), e, "j={j}");
        }
        assert_eq!(d_j(3, &partition![]), 0);
    }

    #[test]
    fn f_j_membership() {
        assert!(in_f_j(0, &partition![]));
        assert!(in_f_j(4, &partition![]));
        assert!(!in_f_j(0, &partition![7, 2]));
        assert!(in_f_j(0, &partition![13, 10, 9, 9, 4, 3, 2, 2, 1, 1]));
        // λ_i - i for (5,3,2,2) is 4,1,-1,-2
        let p = partition![5, 3, 2, 2];
        for j in 0..8 {
            assert_eq!(in_f_j(j, &p), j != 4 && j != 1, "j={j}");
        }
    }

    #[test]
    fn part_membership() {
        assert!(has_part(0, &partition![]));
        assert!(has_part(3, &partition![5, 3, 2, 2]));
        assert!(!has_part(4, &partition![5, 3, 2, 2]));
    }
}
