use theta_asym::oracle::{crank, lerch_oracle, partitions, rank, statistic_counts};
use theta_asym::stats::{a_coeff, b_coeff, j_coeff, n_coeff};
use theta_asym::{partition_table, Integer};

#[test]
fn quadratic_sums_match_lerch_expansion() {
    for k in 1..=3u32 {
        let table = partition_table(k, 100);
        let oracle = lerch_oracle(k, 12, 112).unwrap();
        for m in -10..=10i64 {
            for n in 0..=100u64 {
                assert_eq!(j_coeff(m, k, n, &table).unwrap(), oracle.j_shifted(m, n), "j k={k} m={m} n={n}");
                assert_eq!(a_coeff(m, k, n, &table).unwrap(), oracle.a(m, n), "a k={k} m={m} n={n}");
                if m >= 0 {
                    assert_eq!(b_coeff(m, k, n, &table).unwrap(), oracle.b(m, n), "b k={k} m={m} n={n}");
                }
            }
        }
    }
}

// n = 1 is the classical exception to the crank generating function:
// it assigns M(0,1) = -1 and M(±1,1) = 1, while the single partition has
// crank -1.
#[test]
fn crank_and_rank_match_enumeration() {
    let table = partition_table(1, 40);
    for n in 2..=40u32 {
        let cranks = statistic_counts(n, crank);
        let ranks = statistic_counts(n, rank);
        let total = partitions(n).len() as u64;
        assert_eq!(cranks.iter().sum::<u64>(), total);
        for m in -(n as i64)..=(n as i64) {
            let idx = (m + n as i64) as usize;
            assert_eq!(n_coeff(1, m, n as u64, &table).unwrap(), Integer::from(cranks[idx]), "crank n={n} m={m}");
            assert_eq!(n_coeff(2, m, n as u64, &table).unwrap(), Integer::from(ranks[idx]), "rank n={n} m={m}");
        }
    }
}
