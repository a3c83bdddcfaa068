#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import pytest

from tgmod import misc, verify

quick = ['psi-identity', 'testfn-normalization', 'parseval',
    'identity-closed-forms', 'lambda-monotonicity', 'leibov']

slow = ['cesaro-ladder', 'subordination', 'tail-decay', 'carleson-bracket',
    'reverse-holder', 'classification']

def test_selection():
    assert verify.selection('all') == list(verify.checks)
    assert verify.selection(' parseval , leibov ') == ['parseval', 'leibov']
    assert verify.selection('') == []

    with pytest.raises(misc.InvalidParameter):
        verify.selection('parseval,unknown')

    assert verify.selection(['parseval', ' leibov']) == ['parseval', 'leibov']

    with pytest.raises(misc.InvalidParameter):
        verify.verify_suite(['parseval', 'unknown'])

def test_names():
    assert sorted(quick + slow) == sorted(verify.checks)

@pytest.mark.parametrize('name', quick)
def test_quick(name):
    record = verify.checks[name]()

    assert record['name'] == name
    assert record['passed'], record

@pytest.mark.slow
@pytest.mark.parametrize('name', slow)
def test_slow(name):
    record = verify.checks[name]()

    assert record['passed'], record

def test_suite():
    report = verify.verify_suite('lambda-monotonicity')

    assert report['passed']
    assert report['checks'][0]['seconds'] >= 0

def test_budget():
    with pytest.raises(misc.BudgetExceeded) as error:
        verify.verify_suite(['lambda-monotonicity', 'psi-identity'], budget=0)

    assert len(error.value.report['checks']) == 1
