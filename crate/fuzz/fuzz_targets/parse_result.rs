#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(result) = sched_core::format::parse_result(text) {
        let serialized = sched_core::format::serialize_result(&result);
        let again = sched_core::format::parse_result(&serialized).expect("own output reparses");
        assert_eq!(result, again);
    }
});
