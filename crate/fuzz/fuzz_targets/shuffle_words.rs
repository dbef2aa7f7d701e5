#![no_main]

use libfuzzer_sys::fuzz_target;

// Input: newline-separated words, last line is the target. Word parsing
// rejects non-binary characters; on accepted inputs the membership DP and
// both constructions must run without panicking and any witness must
// verify.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut lines: Vec<&str> = text.lines().collect();
    let Some(target) = lines.pop() else { return };
    if lines.len() > 3 || target.len() > 10 || lines.iter().any(|w| w.len() > 10) {
        return;
    }

    let Ok(instance) = sched_core::reduction::ShuffleInstance::new(lines, target) else {
        return;
    };
    let membership = instance.membership();
    if let Some(witness) = membership.witness() {
        assert!(witness.verify(instance.u_words(), instance.v_word()));
    }

    let c1 = sched_core::reduction::construct_1(&instance, 1, 2).expect("construction 1 builds");
    let c2 = sched_core::reduction::construct_2(&instance, 1, 2).expect("construction 2 builds");
    for inst in [c1, c2] {
        sched_core::model::instance_stats(&inst);
    }
});
