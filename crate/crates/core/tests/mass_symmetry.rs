use theta_asym::stats::{n_coeff, unimodal_check};
use theta_asym::{partition_table, Integer};

#[test]
fn crank_and_rank_mass() {
    let table = partition_table(1, 200);
    for k in 1..=2u32 {
        for n in 1..=200u64 {
            let total: Integer = (-(n as i64)..=(n as i64)).map(|m| n_coeff(k, m, n, &table).unwrap()).sum();
            assert_eq!(&total, table.get(n as i64).unwrap(), "k={k} n={n}");
        }
    }
}

#[test]
fn symmetric_in_m() {
    let table = partition_table(1, 200);
    for k in 1..=4u32 {
        for n in (0..=200u64).step_by(7) {
            for m in 1..=(n as i64 + 2) {
                assert_eq!(n_coeff(k, m, n, &table).unwrap(), n_coeff(k, -m, n, &table).unwrap());
            }
        }
    }
}

#[test]
fn rank_counts_unimodal() {
    let table = partition_table(1, 300);
    for n in 50..=300u64 {
        let top = n as i64 - 3;
        let seq: Vec<Integer> = (-top..=top).map(|m| n_coeff(2, m, n, &table).unwrap()).collect();
        let (ok, peak) = unimodal_check(&seq);
        assert!(ok, "n={n}");
        assert_eq!(peak as i64 - top, 0, "rank counts peak at m = 0 for n = {n}");
    }
}
