"""Listen/jam phase schedule: the last slot of every T_J-slot period jams."""
from dataclasses import dataclass


@dataclass(frozen=True)
class PhaseSchedule:
    period: int
    start_slot: int = 0

    def is_active(self, slot):
        return slot >= self.start_slot

    def is_jamming(self, slot):
        return self.is_active(slot) and (slot - self.start_slot) % self.period == self.period - 1

    def average_power(self, channels_per_attack, jam_power):
        """n_J P_J / T_J."""
        return channels_per_attack * jam_power / self.period
