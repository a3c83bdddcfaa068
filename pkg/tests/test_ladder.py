#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest

from tgmod import ladder, misc

@pytest.mark.parametrize('values,flag', [
    ([1, 2, 3, 4, 5], 'diverging'),
    ([1, 1.05, 1.1, 1.15, 1.2], 'indeterminate'),
    ([5, 4, 3, 2, 1], 'converging'),
    ([0, 0, 0, 0], 'converging'),
    ([1], 'indeterminate'),
    ])
def test_trend(values, flag):
    assert ladder.trend(values) == flag

def test_ladder():
    rungs = ladder.Ladder([0.5, 0.75, 0.875, 0.9375], [1, 3, 2, 1],
        [0, 1, 2, 3], name='radius')

    assert rungs.tail_estimate == 3
    assert rungs.flag == 'converging'
    assert rungs.header() == ['radius', 'value', 'angle']

    assert (2 * rungs).tail_estimate == 6

    data = rungs.to_dict()

    assert data['rungs'][1] == dict(radius=0.75, value=3.0, angle=1.0)

    lines = rungs.to_csv().splitlines()

    assert lines[0] == 'radius,value,angle'
    assert lines[1] == '0.5,1.0,0.0'

def test_columns():
    rungs = ladder.Ladder([0.5, 0.25], [1, 2], name='size',
        columns=dict(ratio=np.array([0.1, 0.2])), summary=dict(alpha_hat=4))

    assert rungs.header() == ['size', 'ratio', 'value', 'angle']
    assert rungs.to_dict()['alpha_hat'] == 4

@pytest.mark.parametrize('levels,values', [
    ([], []),
    ([0.5, 0.6], [1]),
    ([0.5, 0.7, 0.6], [1, 1, 1]),
    ([0.5, 0.6], [1, -1]),
    ])
def test_invalid(levels, values):
    with pytest.raises(misc.InvalidParameter):
        ladder.Ladder(levels, values)
