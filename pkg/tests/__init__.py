"""Test suite for clifford-rqm."""
