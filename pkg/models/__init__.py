#!/usr/bin/env python3
# -*- coding:utf-8 -*-

from .basic import AdditiveModel, SensorArray
from .build import build_model, linear_map, constant_matrix
