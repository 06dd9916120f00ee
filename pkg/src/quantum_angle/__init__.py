"""Quantum angle between states, quantum kinematics and the certainty principle."""
