#![no_main]

use libfuzzer_sys::fuzz_target;

// Parsing and validating arbitrary bytes must never panic; errors are the
// expected outcome for malformed input.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(raw) = sched_core::format::parse_instance(text) {
        if let Ok(inst) = raw.validate() {
            // a validated instance must serialize canonically and reparse
            let canonical = sched_core::format::serialize_instance(&inst);
            let again = sched_core::format::parse_instance(&canonical)
                .expect("canonical output reparses")
                .validate()
                .expect("canonical output revalidates");
            assert_eq!(canonical, sched_core::format::serialize_instance(&again));
        }
    }
});
