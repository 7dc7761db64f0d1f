from typing import List

from ..market import Market
from ..schedule import PiScheduleMatching, PiScheme, WorstSituationProfile, full_matched_agents
from ..structure_outputs import ProfileEntry, ShareEntry, fraction_text


def share_entries(t: PiScheduleMatching) -> List[ShareEntry]:
    return [
        ShareEntry(firm=y.firm.label, assignment=y.label, share=fraction_text(value))
        for y, value in t.shares.items()
        if value != 0
    ]


def profile_entries(m: Market, profile: WorstSituationProfile) -> List[ProfileEntry]:
    return [ProfileEntry(agent=a.label, worst=profile.entry_label(a)) for a in m.agents]


def full_matched_labels(m: Market, s: PiScheme, t: PiScheduleMatching) -> List[str]:
    tight = full_matched_agents(m, s, t)
    return [a.label for a in m.agents if a in tight]
