use confalg::oracle::check_kernel_oracles;

#[test]
fn kernel_oracles_hold_on_fifty_samples() {
    for seed in [1, 7, 2024] {
        let rep = check_kernel_oracles(seed, 50).unwrap();
        let bad: Vec<_> = rep.failures().map(|r| r.id.clone()).collect();
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
    }
}
