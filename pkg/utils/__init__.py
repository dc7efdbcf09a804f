"""Standalone scripts which use tunedline.

"""
