use nodephysics::{
    heating_rates, heating_trajectory, MotionalState, END_NBAR, HEATING_ATTEMPTS, START_NBAR,
};

#[test]
fn trajectory_hits_calibration_endpoints() {
    let rates = heating_rates();
    let start = MotionalState::start_of_loop2();
    let at_start = heating_trajectory(0, &rates, &start);
    let at_end = heating_trajectory(HEATING_ATTEMPTS, &rates, &start);
    for i in 0..4 {
        assert!((at_start.nbar[i] - START_NBAR[i]).abs() < 1e-12);
        assert!((at_end.nbar[i] - END_NBAR[i]).abs() < 1e-12);
    }
}

#[test]
fn midpoint_temperatures() {
    let mid = MotionalState::mid_loop2();
    let expected = [18.5, 21.5, 4.6, 13.5];
    for i in 0..4 {
        assert!((mid.nbar[i] - expected[i]).abs() < 1e-12, "mode {i}: {}", mid.nbar[i]);
    }
}

#[test]
fn heating_is_additive_in_attempts() {
    let rates = heating_rates();
    let start = MotionalState::start_of_loop2();
    let direct = heating_trajectory(210, &rates, &start);
    let mut stepped = start.clone();
    for _ in 0..3 {
        stepped = heating_trajectory(70, &rates, &stepped);
    }
    for i in 0..4 {
        assert!((direct.nbar[i] - stepped.nbar[i]).abs() < 1e-9);
    }
}

#[test]
fn end_of_loop2_matches_constants() {
    let end = MotionalState::end_of_loop2();
    for i in 0..4 {
        assert!((end.nbar[i] - END_NBAR[i]).abs() < 1e-12);
    }
}
