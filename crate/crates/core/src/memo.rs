use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Populate-once cache keyed by genus. Concurrent callers for the same key
/// block on a single initialization; different keys initialize
/// independently.
pub(crate) struct Memo<V> {
    slots: Mutex<BTreeMap<u32, Arc<OnceLock<V>>>>,
}

impl<V: Clone> Memo<V> {
    pub(crate) const fn new() -> Self {
        Memo { slots: Mutex::new(BTreeMap::new()) }
    }

    pub(crate) fn get_or_init(&self, key: u32, init: impl FnOnce() -> V) -> V {
        let slot = {
            let mut slots = self.slots.lock().expect("memo lock poisoned");
            Arc::clone(slots.entry(key).or_default())
        };
        slot.get_or_init(init).clone()
    }
}
