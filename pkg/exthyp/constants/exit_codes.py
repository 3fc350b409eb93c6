# -*- coding: utf-8 -*-

exOk = 0
exVerificationFailed = 1
exUsage = 2
