import json

import pytest

import evenrhythm as er


def test_parse_notations_agree():
    a = er.parse_rhythm("1001001000100100")
    b = er.parse_rhythm("0,3,6,10,13", pulses=16)
    c = er.parse_rhythm("i:3,3,4,3,3")
    assert a == b == c
    assert a.binary() == "1001001000100100"


def test_bad_binary_raises():
    with pytest.raises(ValueError):
        er.parse_rhythm("10x1")


def test_averages():
    assert er.av_fc(3, 6) == 5
    assert er.av_cf(3, 6) == 4
    assert er.av_z(6, 1, 8) == 7


def test_orbit_reaches_cycle():
    report = er.orbit(er.parse_rhythm("i:3,4,7,2"))
    assert report["distance_to_cycle"] == 4
    assert report["steps"][0]["d"] == [3, 4, 7, 2]
    assert report["steps"][-1]["width"] <= 1
    assert not report["cap_hit"]


def test_classify():
    assert er.classify([4, 4, 4, 4]) == "FixedWidth0"
    assert er.classify([4, 5, 4, 5]) == "FixedWidth1EvenMin"
    assert er.classify([3, 4, 3, 4, 3]) == "PeriodicWidth1OddMin"
    assert er.classify([3, 4, 7, 2]) == "Transient"
    assert er.dav_fc([3, 4, 3, 4, 3]) == [4, 3, 4, 3, 3]
    assert er.rotation_period([3, 4, 3, 4]) == 2


def test_corpus_distances():
    for name, rhythm, expected in er.corpus():
        assert er.orbit(rhythm)["distance_to_cycle"] == expected, name


def test_trace_json_keys():
    doc = json.loads(er.trace_json(er.parse_rhythm("i:3,4,7,2")))
    assert {"pulses", "onsets", "steps", "distance_to_cycle", "terminal_class", "period"} <= doc.keys()


def test_identities_hold_small():
    results = er.verify_identities(5)
    assert results
    assert all(results.values()), [k for k, v in results.items() if not v]


def test_hamming():
    assert er.hamming_distance("1010", "0110") == 2
