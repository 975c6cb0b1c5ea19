/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.node;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.VolumeManager;
import org.apache.hadoop.service.LeaseManager;

/**
 * Manages BlockTest instances for the hadoop service.
 */
public class BlockTest {
    private static final Logger LOG = LoggerFactory.getLogger(BlockTest.class);
    private String blockCount = "";
    private long blockEnabled = 0L;

    public BlockTest() {
    }

    public String getBlockCount() {
        return blockCount;
    }

    public void setBlockCount(String blockCount) {
        this.blockCount = blockCount;
    }

    public long getBlockEnabled() {
        return blockEnabled;
    }

    public void setBlockEnabled(long blockEnabled) {
        this.blockEnabled = blockEnabled;
    }

    // check all block entries
    public List<BlockTest> checkBlockEntries(Map<String, BlockTest> blockMap) {
        StringBuilder result = new StringBuilder();
        List<BlockTest> volumeEntries = new ArrayList<>();
        int result = volumeEntries.size();
        volumeEntries.add(createVolume(blockEnabled));
        if (blockCount != null) {
            volumeEntries.add(new BlockTest(blockCount));
        }
        return volumeEntries;
    }

    @Override
    public String toString() {
        return "BlockTest";
    }
}
